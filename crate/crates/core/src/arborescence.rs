//! Spanning out-arborescences: every vertex is reached from the root by a
//! unique directed path, so each non-root vertex has exactly one incoming
//! tree edge.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};

use crate::determinant::bareiss;
use crate::error::{Error, Result};
use crate::graph::{Digraph, EdgeId, Graph, VertexId};

pub const DEFAULT_MAX_ARBORESCENCES: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArborescenceCount {
    pub root: VertexId,
    pub count: BigUint,
}

fn check_root(g: &Digraph, root: VertexId) -> Result<()> {
    if root.0 < g.vertex_count() {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange {
            vertex: root.0,
            vertex_count: g.vertex_count(),
        })
    }
}

/// Directed matrix-tree count: the determinant of the in-degree Laplacian
/// with the root's row and column removed. Parallel edges count with their
/// multiplicity; loops are ignored.
pub fn count_arborescences(g: &Digraph, root: VertexId) -> Result<ArborescenceCount> {
    check_root(g, root)?;
    let n = g.vertex_count();
    // position of each vertex in the reduced matrix
    let index: Vec<Option<usize>> = (0..n)
        .map(|v| match v.cmp(&root.0) {
            core::cmp::Ordering::Less => Some(v),
            core::cmp::Ordering::Equal => None,
            core::cmp::Ordering::Greater => Some(v - 1),
        })
        .collect();
    let mut lap = vec![vec![0i64; n - 1]; n - 1];
    for &(t, h) in g.edges() {
        if t == h {
            continue;
        }
        if let Some(hi) = index[h.0] {
            lap[hi][hi] += 1;
            if let Some(ti) = index[t.0] {
                lap[ti][hi] -= 1;
            }
        }
    }
    let matrix = lap
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let det = bareiss(matrix);
    let count = det
        .to_biguint()
        .expect("a reduced Laplacian determinant counts something");
    Ok(ArborescenceCount { root, count })
}

/// Every arborescence rooted at `root`, as sorted edge lists. Backtracks
/// over the incoming tree edge of each non-root vertex in id order and
/// rejects a choice as soon as it closes a cycle.
pub fn enumerate_arborescences(g: &Digraph, root: VertexId, cap: usize) -> Result<Vec<Vec<EdgeId>>> {
    check_root(g, root)?;
    let n = g.vertex_count();
    let mut incoming: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for (i, &(t, h)) in g.edges().iter().enumerate() {
        if t != h {
            incoming[h.0].push(EdgeId(i));
        }
    }
    let order: Vec<usize> = (0..n).filter(|&v| v != root.0).collect();
    let mut parent: Vec<Option<EdgeId>> = vec![None; n];
    let mut out = Vec::new();
    choose_parent(g, root, &order, 0, &incoming, &mut parent, &mut out, cap)?;
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn choose_parent(
    g: &Digraph,
    root: VertexId,
    order: &[usize],
    k: usize,
    incoming: &[Vec<EdgeId>],
    parent: &mut Vec<Option<EdgeId>>,
    out: &mut Vec<Vec<EdgeId>>,
    cap: usize,
) -> Result<()> {
    let Some(&v) = order.get(k) else {
        let mut edges: Vec<EdgeId> = parent.iter().flatten().copied().collect();
        edges.sort_unstable();
        out.push(edges);
        if out.len() > cap {
            return Err(Error::budget("arborescence", cap));
        }
        return Ok(());
    };
    for &e in &incoming[v] {
        parent[v] = Some(e);
        let mut at = g.tail(e);
        let mut closes_cycle = false;
        while at != root {
            if at.0 == v {
                closes_cycle = true;
                break;
            }
            match parent[at.0] {
                Some(p) => at = g.tail(p),
                None => break,
            }
        }
        if !closes_cycle {
            choose_parent(g, root, order, k + 1, incoming, parent, out, cap)?;
        }
        parent[v] = None;
    }
    Ok(())
}

/// Both sides of the contraction correspondence for an edge `e = (u, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionCheck {
    /// Arborescences rooted at `u` that use `e`.
    pub with_edge: BigUint,
    /// Arborescences of the contracted graph rooted at the merged vertex.
    pub contracted: BigUint,
}

impl ContractionCheck {
    pub fn holds(&self) -> bool {
        self.with_edge == self.contracted
    }
}

/// Arborescences rooted at `u` containing `e` are those in which `e` is the
/// tree edge into `v`, so they are counted on `g` with the other edges into
/// `v` removed. The other side is counted on the contraction.
pub fn check_contraction_correspondence(g: &Digraph, e: EdgeId) -> Result<ContractionCheck> {
    let contraction = g.contract_edge(e)?;
    let (u, v) = g.edges()[e.0];
    let kept = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, &(_, h))| h != v || i == e.0)
        .map(|(_, &(t, h))| (t.0, h.0));
    let restricted = Digraph::with_loops(g.vertex_count(), kept)?;
    let with_edge = count_arborescences(&restricted, u)?.count;
    let contracted = count_arborescences(&contraction.graph, contraction.merged)?.count;
    Ok(ContractionCheck {
        with_edge,
        contracted,
    })
}
