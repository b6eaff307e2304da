//! Walks, trails and circuits.
//!
//! A [`Circuit`] is a closed trail modulo cyclic rotation. Because the edges
//! of a trail are pairwise distinct, the rotation with the lexicographically
//! smallest edge sequence is simply the one that starts at the smallest edge
//! id, and that is the stored representative.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Alternating vertex/edge sequence `v0 e1 v1 ... ed vd`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum WalkKind {
    Walk,
    Trail,
    ClosedTrail,
    SimpleClosedTrail,
}

impl Walk {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Result<Self> {
        if vertices.len() != edges.len() + 1 {
            return Err(Error::MalformedWalk {
                index: vertices.len().min(edges.len()),
            });
        }
        Ok(Walk { vertices, edges })
    }

    /// Follow `edges` from `start`. In a digraph every edge must leave the
    /// current vertex; in a multigraph it must be incident to it.
    pub fn from_edges<G: Graph + ?Sized>(g: &G, start: VertexId, edges: &[EdgeId]) -> Result<Self> {
        let mut vertices = Vec::with_capacity(edges.len() + 1);
        vertices.push(start);
        let mut at = start;
        for (i, &e) in edges.iter().enumerate() {
            if e.0 >= g.edge_count() {
                return Err(Error::MalformedWalk { index: i });
            }
            let (a, b) = g.endpoints(e);
            at = if a == at {
                b
            } else if !g.is_directed() && b == at {
                a
            } else {
                return Err(Error::MalformedWalk { index: i });
            };
            vertices.push(at);
        }
        Ok(Walk {
            vertices,
            edges: edges.to_vec(),
        })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    fn has_distinct_edges(&self) -> bool {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    fn is_simple_closed(&self) -> bool {
        let d = self.edges.len();
        let mut seen = self.vertices[..d].to_vec();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Strongest class the walk belongs to. Fails with the 0-based position
    /// of the first edge that is not incident to its neighbours.
    pub fn classify<G: Graph + ?Sized>(&self, g: &G) -> Result<WalkKind> {
        for (i, &e) in self.edges.iter().enumerate() {
            if e.0 >= g.edge_count() {
                return Err(Error::MalformedWalk { index: i });
            }
            let (a, b) = g.endpoints(e);
            let (x, y) = (self.vertices[i], self.vertices[i + 1]);
            let ok = (a == x && b == y) || (!g.is_directed() && a == y && b == x);
            if !ok {
                return Err(Error::MalformedWalk { index: i });
            }
        }
        if !self.has_distinct_edges() {
            return Ok(WalkKind::Walk);
        }
        if self.edges.is_empty() || !self.is_closed() {
            return Ok(WalkKind::Trail);
        }
        if self.is_simple_closed() {
            Ok(WalkKind::SimpleClosedTrail)
        } else {
            Ok(WalkKind::ClosedTrail)
        }
    }

    /// Closed walk starting `k` edges later.
    fn rotated(&self, k: usize) -> Walk {
        let d = self.edges.len();
        let k = k % d.max(1);
        let mut edges = Vec::with_capacity(d);
        edges.extend_from_slice(&self.edges[k..]);
        edges.extend_from_slice(&self.edges[..k]);
        let mut vertices = Vec::with_capacity(d + 1);
        vertices.extend_from_slice(&self.vertices[k..d]);
        vertices.extend_from_slice(&self.vertices[..=k]);
        Walk { vertices, edges }
    }
}

/// A closed walk of positive length with pairwise distinct edges. Incidence
/// is not re-checked here; use [`Walk::classify`] against a graph for that.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClosedTrail(Walk);

impl ClosedTrail {
    pub fn new(walk: Walk) -> Result<Self> {
        if walk.is_empty() || !walk.is_closed() || !walk.has_distinct_edges() {
            return Err(Error::NotClosedTrail);
        }
        Ok(ClosedTrail(walk))
    }

    pub fn walk(&self) -> &Walk {
        &self.0
    }

    pub fn rotate(&self, k: usize) -> ClosedTrail {
        ClosedTrail(self.0.rotated(k))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Closed trail up to rotation, stored starting at its smallest edge id.
///
/// Equality and ordering look at the edge sequence alone; in a digraph it
/// determines the vertices, and in a multigraph the two traversals of a
/// digon are the same circuit.
#[derive(Debug, Clone)]
pub struct Circuit {
    edges: Vec<EdgeId>,
    vertices: Vec<VertexId>,
}

impl PartialEq for Circuit {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges
    }
}

impl Eq for Circuit {}

impl PartialOrd for Circuit {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Circuit {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.edges.cmp(&other.edges)
    }
}

impl core::hash::Hash for Circuit {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.edges.hash(state);
    }
}

pub fn canonicalize(t: &ClosedTrail) -> Circuit {
    let w = &t.0;
    let start = w
        .edges
        .iter()
        .enumerate()
        .min_by_key(|(_, &e)| e)
        .map(|(i, _)| i)
        .unwrap_or(0);
    let r = w.rotated(start);
    Circuit {
        edges: r.edges,
        vertices: r.vertices,
    }
}

impl Circuit {
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Closed vertex sequence `v0 .. vd` with `vd == v0`.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Vertex visits around the circuit, `v0 .. v(d-1)`.
    pub fn visits(&self) -> &[VertexId] {
        &self.vertices[..self.edges.len()]
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn trail(&self) -> ClosedTrail {
        ClosedTrail(Walk {
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
        })
    }

    /// The representative starting `k` edges after the canonical one.
    pub fn rotation(&self, k: usize) -> ClosedTrail {
        self.trail().rotate(k)
    }

    pub fn edge_set(&self) -> Vec<EdgeId> {
        let mut s = self.edges.clone();
        s.sort_unstable();
        s
    }
}

/// Comma-separated edge ids in canonical rotation.
impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// A circuit without repeated vertices. Length 1 only occurs for loops.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle(Circuit);

impl Cycle {
    pub fn new(circuit: Circuit) -> Option<Self> {
        let mut seen = circuit.visits().to_vec();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            None
        } else {
            Some(Cycle(circuit))
        }
    }

    pub fn circuit(&self) -> &Circuit {
        &self.0
    }

    pub fn edges(&self) -> &[EdgeId] {
        self.0.edges()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn edge_set(&self) -> Vec<EdgeId> {
        self.0.edge_set()
    }

    pub fn vertex_set(&self) -> Vec<VertexId> {
        let mut v = self.0.visits().to_vec();
        v.sort_unstable();
        v
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.0.visits().contains(&v)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The first simple closed subtrail `v_i t v_j`: `j` is the smallest index
/// at which some earlier vertex repeats. Returns the cycle with `(i, j)`.
pub fn first_simple_closed_subtrail(t: &ClosedTrail) -> (Cycle, usize, usize) {
    let w = &t.0;
    let size = w.vertices.iter().map(|v| v.0 + 1).max().unwrap_or(0);
    let mut first_seen = vec![usize::MAX; size];
    for (j, v) in w.vertices.iter().enumerate() {
        let i = first_seen[v.0];
        if i != usize::MAX {
            let sub = ClosedTrail(Walk {
                vertices: w.vertices[i..=j].to_vec(),
                edges: w.edges[i..j].to_vec(),
            });
            let cycle = Cycle::new(canonicalize(&sub)).expect("first repeat closes a simple trail");
            return (cycle, i, j);
        }
        first_seen[v.0] = j;
    }
    unreachable!("a closed trail repeats its initial vertex")
}
