//! Cycle enumeration: the directed cycles `B(D)` of a digraph, the undirected
//! cycles `F(X)` of a multigraph, and the cyclomatic number.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{first_unreachable, Digraph, EdgeId, Graph, Multigraph, VertexId};
use crate::walks::{canonicalize, Circuit, ClosedTrail, Cycle, Walk};

pub const DEFAULT_MAX_CYCLES: usize = 1_000_000;

struct CycleSearch<'a> {
    steps: &'a [Vec<(EdgeId, VertexId)>],
    start: usize,
    on_path: Vec<bool>,
    used: Vec<bool>,
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
    found: BTreeSet<Circuit>,
    cap: usize,
}

impl CycleSearch<'_> {
    fn extend(&mut self, at: VertexId) -> Result<()> {
        for &(e, w) in &self.steps[at.0] {
            if self.used[e.0] {
                continue;
            }
            if w.0 == self.start {
                self.edges.push(e);
                self.vertices.push(w);
                let walk = Walk::new(self.vertices.clone(), self.edges.clone())?;
                let circuit = canonicalize(&ClosedTrail::new(walk)?);
                self.edges.pop();
                self.vertices.pop();
                self.found.insert(circuit);
                if self.found.len() > self.cap {
                    return Err(Error::budget("cycle", self.cap));
                }
            } else if w.0 > self.start && !self.on_path[w.0] {
                self.on_path[w.0] = true;
                self.used[e.0] = true;
                self.edges.push(e);
                self.vertices.push(w);
                self.extend(w)?;
                self.vertices.pop();
                self.edges.pop();
                self.used[e.0] = false;
                self.on_path[w.0] = false;
            }
        }
        Ok(())
    }
}

/// Every cycle of `g`, found by backtracking from each start vertex through
/// larger vertices only. In a multigraph a cycle of length at least 3 shows
/// up once per direction, a digon once. Sorted by edge set.
pub fn circuit_cycles<G: Graph + ?Sized>(g: &G, cap: usize) -> Result<Vec<Cycle>> {
    let steps = g.steps();
    let mut search = CycleSearch {
        steps: &steps,
        start: 0,
        on_path: vec![false; g.vertex_count()],
        used: vec![false; g.edge_count()],
        vertices: Vec::new(),
        edges: Vec::new(),
        found: BTreeSet::new(),
        cap,
    };
    for s in 0..g.vertex_count() {
        search.start = s;
        search.on_path[s] = true;
        search.vertices.push(VertexId(s));
        search.extend(VertexId(s))?;
        search.vertices.pop();
        search.on_path[s] = false;
    }
    let mut cycles: Vec<Cycle> = search
        .found
        .into_iter()
        .map(|c| Cycle::new(c).expect("search never repeats a vertex"))
        .collect();
    cycles.sort_by_cached_key(|c| (c.edge_set(), c.clone()));
    Ok(cycles)
}

/// `B(D)`, the directed cycles of a digraph. Loops are cycles of length 1;
/// they are found as the digons of [`Digraph::expand_loops`] and mapped
/// back.
pub fn directed_cycles(g: &Digraph, cap: usize) -> Result<Vec<Cycle>> {
    if !g.has_loops() {
        return circuit_cycles(g, cap);
    }
    let expansion = g.expand_loops();
    let expanded = circuit_cycles(&expansion.graph, cap)?;
    let mut cycles = Vec::with_capacity(expanded.len());
    for c in expanded {
        let edges = expansion.restrict_edges(c.edges());
        let walk = Walk::from_edges(g, g.tail(edges[0]), &edges)?;
        let circuit = canonicalize(&ClosedTrail::new(walk)?);
        cycles.push(Cycle::new(circuit).expect("expansion preserves simplicity"));
    }
    cycles.sort_by_cached_key(|c| (c.edge_set(), c.clone()));
    Ok(cycles)
}

/// An element of `F(X)`: a connected subgraph in which every vertex has
/// degree 2, given by its edge and vertex sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UndirectedCycle {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
}

impl UndirectedCycle {
    pub fn is_digon(&self) -> bool {
        self.edges.len() == 2
    }
}

/// `F(X)`, sorted by edge set.
pub fn undirected_cycles(x: &Multigraph, cap: usize) -> Result<Vec<UndirectedCycle>> {
    let directed = circuit_cycles(x, cap.saturating_mul(2))?;
    let mut out: Vec<UndirectedCycle> = Vec::new();
    for c in directed {
        let edges = c.edge_set();
        if out.last().map(|u| &u.edges) == Some(&edges) {
            continue;
        }
        out.push(UndirectedCycle {
            edges,
            vertices: c.vertex_set(),
        });
        if out.len() > cap {
            return Err(Error::budget("cycle", cap));
        }
    }
    Ok(out)
}

/// `m - n + 1` for a connected graph. For a loop-allowed digraph this equals
/// the value on its loop expansion, which adds one vertex and one edge per
/// loop.
pub fn cyclomatic_number<G: Graph + ?Sized>(g: &G) -> Result<usize> {
    if let Some(v) = first_unreachable(g) {
        return Err(Error::Disconnected(v));
    }
    Ok(g.edge_count() + 1 - g.vertex_count())
}
