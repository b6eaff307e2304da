//! Partitions of the edge set into edge-disjoint cycles.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{check_balanced, EdgeId, Graph, VertexId};
use crate::walks::{canonicalize, first_simple_closed_subtrail, ClosedTrail, Cycle, Walk};

pub const DEFAULT_MAX_PARTITIONS: usize = 100_000;

/// Edge-disjoint cycles covering every edge, sorted by edge set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclePartition {
    cycles: Vec<Cycle>,
}

impl CyclePartition {
    pub fn new(mut cycles: Vec<Cycle>) -> Self {
        cycles.sort_by_cached_key(|c| c.edge_set());
        CyclePartition { cycles }
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Sorted list of sorted edge sets; two partitions are the same iff
    /// their keys are equal.
    pub fn key(&self) -> Vec<Vec<EdgeId>> {
        self.cycles.iter().map(Cycle::edge_set).collect()
    }

    /// Whether the cycles are pairwise edge-disjoint and cover all of `g`.
    pub fn is_partition_of<G: Graph + ?Sized>(&self, g: &G) -> bool {
        let mut hits = vec![0usize; g.edge_count()];
        for c in &self.cycles {
            for e in c.edges() {
                match hits.get_mut(e.0) {
                    Some(h) => *h += 1,
                    None => return false,
                }
            }
        }
        hits.iter().all(|&h| h == 1)
    }
}

/// Greedy decomposition: start at the tail of the smallest unused edge,
/// always leave along the smallest unused edge, and cut off the first simple
/// closed subtrail as soon as a vertex repeats. Repeat on what is left.
///
/// Needs a balanced graph (in = out, or even degrees); connectivity is not
/// required.
pub fn veblen_partition<G: Graph + ?Sized>(g: &G) -> Result<CyclePartition> {
    check_balanced(g)?;
    let steps = g.steps();
    let mut used = vec![false; g.edge_count()];
    let mut cycles = Vec::new();

    while let Some(first) = used.iter().position(|&u| !u) {
        let start = g.endpoints(EdgeId(first)).0;
        let mut vertices = vec![start];
        let mut edges: Vec<EdgeId> = Vec::new();
        let mut at = start;
        while !vertices[..vertices.len() - 1].contains(&at) {
            // a balanced graph never strands the walk before a vertex repeats
            let &(e, w) = steps[at.0]
                .iter()
                .find(|(e, _)| !used[e.0] && !edges.contains(e))
                .ok_or(Error::Unbalanced(at))?;
            edges.push(e);
            vertices.push(w);
            at = w;
        }
        // the walk is a lasso whose loop is its first simple closed subtrail;
        // the stem edges stay unused
        let i = vertices.iter().position(|&v| v == at).expect("repeated vertex");
        let j = vertices.len() - 1;
        let loop_trail = ClosedTrail::new(Walk::new(vertices[i..=j].to_vec(), edges[i..j].to_vec())?)?;
        let (cycle, _, _) = first_simple_closed_subtrail(&loop_trail);
        for e in cycle.edges() {
            used[e.0] = true;
        }
        cycles.push(cycle);
    }
    Ok(CyclePartition::new(cycles))
}

struct PartitionSearch<'a, G: Graph + ?Sized> {
    g: &'a G,
    steps: Vec<Vec<(EdgeId, VertexId)>>,
    covered: Vec<bool>,
    chosen: Vec<Cycle>,
    out: Vec<CyclePartition>,
    cap: usize,
    stop_at: usize,
}

impl<G: Graph + ?Sized> PartitionSearch<'_, G> {
    /// Cycles through `e` that use only uncovered edges. `e` is traversed
    /// from its first endpoint.
    fn cycles_through(&self, e: EdgeId) -> Vec<Cycle> {
        let (a, b) = self.g.endpoints(e);
        let mut found = Vec::new();
        if a == b {
            let walk = Walk::new(vec![a, a], vec![e]).expect("loop walk");
            let c = canonicalize(&ClosedTrail::new(walk).expect("loop trail"));
            found.push(Cycle::new(c).expect("loop is a cycle"));
            return found;
        }
        let mut on_path = vec![false; self.g.vertex_count()];
        let mut used = self.covered.clone();
        used[e.0] = true;
        on_path[a.0] = true;
        on_path[b.0] = true;
        let mut vertices = vec![a, b];
        let mut edges = vec![e];
        self.paths_back(b, a, &mut on_path, &mut used, &mut vertices, &mut edges, &mut found);
        found
    }

    #[allow(clippy::too_many_arguments)]
    fn paths_back(
        &self,
        at: VertexId,
        target: VertexId,
        on_path: &mut [bool],
        used: &mut [bool],
        vertices: &mut Vec<VertexId>,
        edges: &mut Vec<EdgeId>,
        found: &mut Vec<Cycle>,
    ) {
        for &(f, w) in &self.steps[at.0] {
            if used[f.0] {
                continue;
            }
            if w == target {
                edges.push(f);
                vertices.push(w);
                let walk = Walk::new(vertices.clone(), edges.clone()).expect("well formed");
                let c = canonicalize(&ClosedTrail::new(walk).expect("distinct edges"));
                found.push(Cycle::new(c).expect("no repeated vertex"));
                vertices.pop();
                edges.pop();
            } else if !on_path[w.0] {
                on_path[w.0] = true;
                used[f.0] = true;
                edges.push(f);
                vertices.push(w);
                self.paths_back(w, target, on_path, used, vertices, edges, found);
                vertices.pop();
                edges.pop();
                used[f.0] = false;
                on_path[w.0] = false;
            }
        }
    }

    fn run(&mut self) -> Result<bool> {
        let Some(e) = self.covered.iter().position(|&c| !c) else {
            self.out.push(CyclePartition::new(self.chosen.clone()));
            if self.out.len() > self.cap {
                return Err(Error::budget("partition", self.cap));
            }
            return Ok(self.out.len() >= self.stop_at);
        };
        for cycle in self.cycles_through(EdgeId(e)) {
            for f in cycle.edges() {
                self.covered[f.0] = true;
            }
            self.chosen.push(cycle);
            let done = self.run()?;
            let cycle = self.chosen.pop().expect("pushed above");
            for f in cycle.edges() {
                self.covered[f.0] = false;
            }
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn search_partitions<G: Graph + ?Sized>(g: &G, cap: usize, stop_at: usize) -> Result<Vec<CyclePartition>> {
    let mut search = PartitionSearch {
        g,
        steps: g.steps(),
        covered: vec![false; g.edge_count()],
        chosen: Vec::new(),
        out: Vec::new(),
        cap,
        stop_at,
    };
    search.run()?;
    Ok(search.out)
}

/// Every partition of `g` into cycles, by exact-cover backtracking on the
/// smallest uncovered edge. Cycles are searched for directly in the
/// uncovered part of the graph, not taken from a precomputed cycle list.
pub fn enumerate_partitions<G: Graph + ?Sized>(g: &G, cap: usize) -> Result<Vec<CyclePartition>> {
    let mut all = search_partitions(g, cap, usize::MAX)?;
    all.sort_by_cached_key(CyclePartition::key);
    Ok(all)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionUniqueness {
    Unique(CyclePartition),
    /// Two distinct partitions, as witnesses.
    Multiple(CyclePartition, CyclePartition),
    /// The graph has no partition into cycles at all (it is unbalanced).
    None,
}

impl PartitionUniqueness {
    pub fn is_unique(&self) -> bool {
        matches!(self, PartitionUniqueness::Unique(_))
    }
}

/// Stops as soon as a second partition turns up.
pub fn has_unique_partition<G: Graph + ?Sized>(g: &G) -> Result<PartitionUniqueness> {
    let mut found = search_partitions(g, usize::MAX, 2)?;
    Ok(match found.len() {
        0 => PartitionUniqueness::None,
        1 => PartitionUniqueness::Unique(found.pop().expect("one element")),
        _ => {
            let second = found.pop().expect("two elements");
            let first = found.pop().expect("two elements");
            PartitionUniqueness::Multiple(first, second)
        }
    })
}
