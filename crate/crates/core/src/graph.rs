//! Graph data model: loopless and loop-allowed digraphs, loopless
//! multigraphs and their orientations.
//!
//! Vertices and edges carry dense ids `0..n` and `0..m`. Parallel edges are
//! distinct edges with distinct ids. Graphs are immutable once built.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Read-only view shared by [`Digraph`] and [`Multigraph`].
///
/// A *step* is a way to leave a vertex along an edge: a digraph offers its
/// out-edges, a multigraph offers every incident edge.
pub trait Graph {
    fn vertex_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    /// `(tail, head)` for a digraph edge, the stored endpoint pair otherwise.
    fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId);
    fn is_directed(&self) -> bool;

    /// Steps out of every vertex, each list sorted by edge id.
    fn steps(&self) -> Vec<Vec<(EdgeId, VertexId)>> {
        let mut steps = vec![Vec::new(); self.vertex_count()];
        for e in (0..self.edge_count()).map(EdgeId) {
            let (a, b) = self.endpoints(e);
            steps[a.0].push((e, b));
            if !self.is_directed() && a != b {
                steps[b.0].push((e, a));
            }
        }
        steps
    }

    fn edge_ids(&self) -> core::iter::Map<core::ops::Range<usize>, fn(usize) -> EdgeId> {
        (0..self.edge_count()).map(EdgeId as fn(usize) -> EdgeId)
    }

    fn is_loop(&self, e: EdgeId) -> bool {
        let (a, b) = self.endpoints(e);
        a == b
    }
}

/// Directed multigraph. Loops are edges with `tail == head` and are only
/// accepted when the graph is built with [`Digraph::with_loops`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    allow_loops: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degrees {
    pub in_degree: Vec<usize>,
    pub out_degree: Vec<usize>,
}

impl Degrees {
    /// Maximum out-degree over all vertices.
    pub fn max_out(&self) -> usize {
        self.out_degree.iter().copied().max().unwrap_or(0)
    }
}

/// Result of [`Digraph::contract_edge`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Digraph,
    /// The vertex that replaced both endpoints of the contracted edge.
    pub merged: VertexId,
    /// Old vertex id -> new vertex id.
    pub vertex_map: Vec<VertexId>,
    /// Old edge id -> new edge id; `None` for deleted edges.
    pub edge_map: Vec<Option<EdgeId>>,
}

/// Result of [`Digraph::expand_loops`]: each loop `e` at `v` becomes the
/// edge `v -> w` (keeping id `e`) plus a fresh return edge `w -> v` appended
/// after all original edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopExpansion {
    pub graph: Digraph,
    original_vertices: usize,
    original_edges: usize,
    /// `(loop edge, fresh vertex)` in edge order.
    loops: Vec<(EdgeId, VertexId)>,
}

/// An edge-induced subdigraph with maps back into its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Digraph,
    /// New vertex id -> parent vertex id.
    pub vertices: Vec<VertexId>,
    /// New edge id -> parent edge id.
    pub edges: Vec<EdgeId>,
}

fn check_endpoint(v: usize, n: usize) -> Result<VertexId> {
    if v < n {
        Ok(VertexId(v))
    } else {
        Err(Error::VertexOutOfRange {
            vertex: v,
            vertex_count: n,
        })
    }
}

impl Digraph {
    /// Loopless digraph on `vertex_count` vertices.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::build(vertex_count, edges, false)
    }

    /// Loop-allowed digraph.
    pub fn with_loops(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        Self::build(vertex_count, edges, true)
    }

    fn build(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        allow_loops: bool,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::NoVertices);
        }
        let mut list = Vec::new();
        for (t, h) in edges {
            let t = check_endpoint(t, vertex_count)?;
            let h = check_endpoint(h, vertex_count)?;
            if t == h && !allow_loops {
                return Err(Error::LoopNotAllowed(t));
            }
            list.push((t, h));
        }
        Ok(Digraph {
            vertex_count,
            edges: list,
            allow_loops,
        })
    }

    pub fn allows_loops(&self) -> bool {
        self.allow_loops
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|(t, h)| t == h)
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn tail(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].0
    }

    pub fn head(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].1
    }

    /// Number of loops `d_v` at every vertex.
    pub fn loop_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.vertex_count];
        for &(t, h) in &self.edges {
            if t == h {
                counts[t.0] += 1;
            }
        }
        counts
    }

    /// A loop at `v` adds one to both the in- and out-degree of `v`.
    pub fn degrees(&self) -> Degrees {
        let mut in_degree = vec![0; self.vertex_count];
        let mut out_degree = vec![0; self.vertex_count];
        for &(t, h) in &self.edges {
            out_degree[t.0] += 1;
            in_degree[h.0] += 1;
        }
        Degrees {
            in_degree,
            out_degree,
        }
    }

    pub fn is_eulerian(&self) -> bool {
        check_eulerian(self).is_ok()
    }

    pub fn is_weakly_connected(&self) -> bool {
        first_unreachable(self).is_none()
    }

    fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e.0 < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange {
                edge: e.0,
                edge_count: self.edges.len(),
            })
        }
    }

    /// Contract the non-loop edge `e = (u, v)`: `u` and `v` merge into one
    /// vertex and every edge joining `u` and `v` (in either direction,
    /// including `e`) is deleted instead of becoming a loop. Loops already
    /// present at `u` or `v` stay on the merged vertex.
    ///
    /// The merged vertex takes the place of `u`; `v` is removed and the ids
    /// above it shift down by one.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Contraction> {
        self.check_edge(e)?;
        let (u, v) = self.edges[e.0];
        if u == v {
            return Err(Error::LoopEdge(e));
        }
        check_eulerian(self)?;

        let vertex_map: Vec<VertexId> = (0..self.vertex_count)
            .map(|x| {
                let x = if x == v.0 { u.0 } else { x };
                VertexId(if x > v.0 { x - 1 } else { x })
            })
            .collect();
        let merged = vertex_map[u.0];

        let mut edges = Vec::with_capacity(self.edges.len());
        let mut edge_map = Vec::with_capacity(self.edges.len());
        for &(t, h) in &self.edges {
            let joins = (t == u && h == v) || (t == v && h == u);
            if joins {
                edge_map.push(None);
            } else {
                edge_map.push(Some(EdgeId(edges.len())));
                edges.push((vertex_map[t.0], vertex_map[h.0]));
            }
        }
        let graph = Digraph {
            vertex_count: self.vertex_count - 1,
            edges,
            allow_loops: self.allow_loops,
        };
        debug_assert!(
            check_balanced(&graph).is_ok() && graph.is_weakly_connected(),
            "contraction of an Eulerian digraph must stay balanced and connected"
        );
        Ok(Contraction {
            graph,
            merged,
            vertex_map,
            edge_map,
        })
    }

    /// Replace each loop by a digon through a fresh vertex. The identity on
    /// loopless graphs.
    pub fn expand_loops(&self) -> LoopExpansion {
        let n = self.vertex_count;
        let m = self.edges.len();
        let mut edges = self.edges.clone();
        let mut loops = Vec::new();
        for (i, &(t, h)) in self.edges.iter().enumerate() {
            if t == h {
                let fresh = VertexId(n + loops.len());
                edges[i] = (t, fresh);
                loops.push((EdgeId(i), fresh));
            }
        }
        for &(e, fresh) in &loops {
            edges.push((fresh, self.edges[e.0].0));
        }
        LoopExpansion {
            graph: Digraph {
                vertex_count: n + loops.len(),
                edges,
                allow_loops: false,
            },
            original_vertices: n,
            original_edges: m,
            loops,
        }
    }

    /// Subdigraph induced by an edge set. Vertices are the endpoints of the
    /// chosen edges, in increasing parent order.
    pub fn edge_subgraph(&self, edges: &[EdgeId]) -> Subgraph {
        let mut edges: Vec<EdgeId> = edges.to_vec();
        edges.sort_unstable();
        edges.dedup();
        let mut used = vec![false; self.vertex_count];
        for &e in &edges {
            let (t, h) = self.edges[e.0];
            used[t.0] = true;
            used[h.0] = true;
        }
        let mut new_id = vec![usize::MAX; self.vertex_count];
        let mut vertices = Vec::new();
        for (v, &u) in used.iter().enumerate() {
            if u {
                new_id[v] = vertices.len();
                vertices.push(VertexId(v));
            }
        }
        let list = edges
            .iter()
            .map(|&e| {
                let (t, h) = self.edges[e.0];
                (VertexId(new_id[t.0]), VertexId(new_id[h.0]))
            })
            .collect();
        Subgraph {
            graph: Digraph {
                vertex_count: vertices.len().max(1),
                edges: list,
                allow_loops: self.allow_loops,
            },
            vertices,
            edges,
        }
    }
}

impl LoopExpansion {
    pub fn original_vertex_count(&self) -> usize {
        self.original_vertices
    }

    pub fn original_edge_count(&self) -> usize {
        self.original_edges
    }

    pub fn loops(&self) -> &[(EdgeId, VertexId)] {
        &self.loops
    }

    pub fn is_fresh_vertex(&self, v: VertexId) -> bool {
        v.0 >= self.original_vertices
    }

    /// The original edge an expanded edge stands for.
    pub fn original_edge(&self, e: EdgeId) -> EdgeId {
        if e.0 < self.original_edges {
            e
        } else {
            self.loops[e.0 - self.original_edges].0
        }
    }

    /// Drop the appended return edges from an edge sequence of the expanded
    /// graph. A closed trail of the expansion maps to the closed trail of the
    /// original graph that takes each loop where the expansion took its digon.
    pub fn restrict_edges(&self, edges: &[EdgeId]) -> Vec<EdgeId> {
        edges
            .iter()
            .copied()
            .filter(|e| e.0 < self.original_edges)
            .collect()
    }

    /// Collapse every fresh digon back into a loop, recovering the original
    /// digraph.
    pub fn collapse(&self) -> Digraph {
        let mut edges = Vec::with_capacity(self.original_edges);
        for (i, &(t, h)) in self.graph.edges[..self.original_edges].iter().enumerate() {
            if h.0 >= self.original_vertices {
                debug_assert_eq!(self.loops.iter().find(|l| l.1 == h).map(|l| l.0), Some(EdgeId(i)));
                edges.push((t, t));
            } else {
                edges.push((t, h));
            }
        }
        Digraph {
            vertex_count: self.original_vertices,
            edges,
            allow_loops: true,
        }
    }
}

impl Graph for Digraph {
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.0]
    }

    fn is_directed(&self) -> bool {
        true
    }
}

/// Loopless undirected multigraph. Edges keep the endpoint order they were
/// given in, but equality and hashing treat them as unordered pairs.
#[derive(Debug, Clone, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

fn unordered(&(a, b): &(VertexId, VertexId)) -> (VertexId, VertexId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl PartialEq for Multigraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.edges.len() == other.edges.len()
            && self
                .edges
                .iter()
                .zip(&other.edges)
                .all(|(x, y)| unordered(x) == unordered(y))
    }
}

impl core::hash::Hash for Multigraph {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.vertex_count.hash(state);
        self.edges.len().hash(state);
        for e in &self.edges {
            unordered(e).hash(state);
        }
    }
}

/// Default ceiling on the edge count for full orientation enumeration.
pub const DEFAULT_MAX_ORIENTATION_EDGES: usize = 20;

impl Multigraph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::NoVertices);
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            let a = check_endpoint(a, vertex_count)?;
            let b = check_endpoint(b, vertex_count)?;
            if a == b {
                return Err(Error::LoopNotAllowed(a));
            }
            list.push((a, b));
        }
        Ok(Multigraph {
            vertex_count,
            edges: list,
        })
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(a, b) in &self.edges {
            deg[a.0] += 1;
            deg[b.0] += 1;
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        first_unreachable(self).is_none()
    }

    /// Connected with every degree even.
    pub fn is_eulerian(&self) -> bool {
        check_eulerian(self).is_ok()
    }

    /// All `2^m` orientations. Edge 0 is the lowest-order bit of the
    /// counter; a set bit reverses the stored endpoint order.
    pub fn orientations(&self, max_edges: usize) -> Result<Orientations<'_>> {
        let m = self.edges.len();
        if m > max_edges || m >= 64 {
            return Err(Error::budget("orientation edge", max_edges.min(63)));
        }
        Ok(Orientations {
            base: self,
            next: 0,
            total: 1u64 << m,
        })
    }
}

impl Graph for Multigraph {
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.0]
    }

    fn is_directed(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation<'a> {
    base: &'a Multigraph,
    reversed: Vec<bool>,
}

impl<'a> Orientation<'a> {
    pub fn new(base: &'a Multigraph, reversed: Vec<bool>) -> Result<Self> {
        if reversed.len() != base.edges.len() {
            return Err(Error::EdgeOutOfRange {
                edge: reversed.len(),
                edge_count: base.edges.len(),
            });
        }
        Ok(Orientation { base, reversed })
    }

    pub fn base(&self) -> &'a Multigraph {
        self.base
    }

    pub fn reversed(&self) -> &[bool] {
        &self.reversed
    }

    pub fn digraph(&self) -> Digraph {
        let edges = self
            .base
            .edges
            .iter()
            .zip(&self.reversed)
            .map(|(&(a, b), &r)| if r { (b, a) } else { (a, b) })
            .collect();
        Digraph {
            vertex_count: self.base.vertex_count,
            edges,
            allow_loops: false,
        }
    }

    /// Drop directions again.
    pub fn forget(&self) -> Multigraph {
        let d = self.digraph();
        Multigraph {
            vertex_count: d.vertex_count,
            edges: d.edges,
        }
    }
}

pub struct Orientations<'a> {
    base: &'a Multigraph,
    next: u64,
    total: u64,
}

impl<'a> Iterator for Orientations<'a> {
    type Item = Orientation<'a>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.total {
            return None;
        }
        let bits = self.next;
        self.next += 1;
        let reversed = (0..self.base.edges.len())
            .map(|i| bits >> i & 1 == 1)
            .collect();
        Some(Orientation {
            base: self.base,
            reversed,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Orientations<'_> {}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

/// Component label (smallest member vertex) of every vertex, ignoring
/// edge directions.
pub fn component_labels<G: Graph + ?Sized>(g: &G) -> Vec<usize> {
    let mut sets = DisjointSets::new(g.vertex_count());
    for e in g.edge_ids() {
        let (a, b) = g.endpoints(e);
        sets.union(a.0, b.0);
    }
    (0..g.vertex_count()).map(|v| sets.find(v)).collect()
}

/// The smallest vertex not weakly connected to vertex 0, if any.
pub fn first_unreachable<G: Graph + ?Sized>(g: &G) -> Option<VertexId> {
    let labels = component_labels(g);
    labels
        .iter()
        .position(|&l| l != labels[0])
        .map(VertexId)
}

/// In-degree equals out-degree everywhere (digraphs) or every degree is
/// even (multigraphs). Loops are balanced by definition.
pub fn check_balanced<G: Graph + ?Sized>(g: &G) -> Result<()> {
    let n = g.vertex_count();
    let mut excess = vec![0i64; n];
    for e in g.edge_ids() {
        let (a, b) = g.endpoints(e);
        if g.is_directed() {
            excess[a.0] += 1;
            excess[b.0] -= 1;
        } else {
            excess[a.0] += 1;
            excess[b.0] += 1;
        }
    }
    let bad = if g.is_directed() {
        excess.iter().position(|&x| x != 0)
    } else {
        excess.iter().position(|&x| x % 2 != 0)
    };
    match bad {
        Some(v) => Err(Error::Unbalanced(VertexId(v))),
        None => Ok(()),
    }
}

/// Eulerian: at least one edge, balanced, and connected over all vertices.
/// A graph with an isolated vertex is not Eulerian, since no circuit can
/// visit it.
pub fn check_eulerian<G: Graph + ?Sized>(g: &G) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    check_balanced(g)?;
    match first_unreachable(g) {
        Some(v) => Err(Error::Disconnected(v)),
        None => Ok(()),
    }
}

/// Whether the subgraph formed by `edges` (and their endpoints) is
/// non-empty, connected and balanced.
pub fn is_eulerian_edge_set<G: Graph + ?Sized>(g: &G, edges: &[EdgeId]) -> bool {
    if edges.is_empty() {
        return false;
    }
    let mut excess: Vec<(usize, i64)> = Vec::with_capacity(2 * edges.len());
    let mut sets = DisjointSets::new(g.vertex_count());
    for &e in edges {
        let (a, b) = g.endpoints(e);
        sets.union(a.0, b.0);
        if g.is_directed() {
            excess.push((a.0, 1));
            excess.push((b.0, -1));
        } else {
            excess.push((a.0, 1));
            excess.push((b.0, 1));
        }
    }
    excess.sort_unstable();
    let mut i = 0;
    while i < excess.len() {
        let v = excess[i].0;
        let mut total = 0;
        while i < excess.len() && excess[i].0 == v {
            total += excess[i].1;
            i += 1;
        }
        let ok = if g.is_directed() { total == 0 } else { total % 2 == 0 };
        if !ok {
            return false;
        }
    }
    let (a, _) = g.endpoints(edges[0]);
    let root = sets.find(a.0);
    edges.iter().all(|&e| sets.find(g.endpoints(e).0 .0) == root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn degrees_of_fixtures() {
        let c3 = fixtures::c3();
        let d = c3.degrees();
        assert_eq!(d.in_degree, vec![1, 1, 1]);
        assert_eq!(d.out_degree, vec![1, 1, 1]);
        assert_eq!(d.max_out(), 1);

        let d4 = fixtures::d4().degrees();
        assert_eq!(d4.in_degree, vec![2, 2]);
        assert_eq!(d4.out_degree, vec![2, 2]);
        assert_eq!(d4.max_out(), 2);

        let d2 = fixtures::de_bruijn(2).degrees();
        assert!(d2.in_degree.iter().all(|&x| x == 2));
        assert!(d2.out_degree.iter().all(|&x| x == 2));
    }

    #[test]
    fn eulerian_recognition() {
        assert!(fixtures::c3().is_eulerian());
        assert!(fixtures::d4().is_eulerian());
        let extra = Digraph::new(3, [(0, 1), (1, 2), (2, 0), (0, 1)]).unwrap();
        assert!(!extra.is_eulerian());
        assert_eq!(check_eulerian(&extra), Err(Error::Unbalanced(VertexId(0))));
        let lonely = Digraph::new(1, []).unwrap();
        assert!(!lonely.is_eulerian());
        let isolated = Digraph::new(4, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(check_eulerian(&isolated), Err(Error::Disconnected(VertexId(3))));
    }

    #[test]
    fn loops_need_loop_mode() {
        assert_eq!(
            Digraph::new(2, [(0, 0)]),
            Err(Error::LoopNotAllowed(VertexId(0)))
        );
        let g = Digraph::with_loops(1, [(0, 0)]).unwrap();
        assert!(g.is_eulerian());
        assert_eq!(g.loop_counts(), vec![1]);
        assert!(Multigraph::new(2, [(1, 1)]).is_err());
        assert_eq!(Digraph::new(0, []), Err(Error::NoVertices));
        assert!(matches!(
            Digraph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn contract_digon_leaves_single_vertex() {
        let digon = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        let c = digon.contract_edge(EdgeId(0)).unwrap();
        assert_eq!(c.graph.vertex_count(), 1);
        assert_eq!(c.graph.edge_count(), 0);
        assert_eq!(c.merged, VertexId(0));
    }

    #[test]
    fn contract_triangle_edge_gives_digon() {
        let c = fixtures::c3().contract_edge(EdgeId(0)).unwrap();
        assert_eq!(c.graph.vertex_count(), 2);
        assert_eq!(c.merged, VertexId(0));
        // 1 -> 2 becomes u' -> 2, 2 -> 0 becomes 2 -> u'
        assert_eq!(
            c.graph.edges(),
            &[(VertexId(0), VertexId(1)), (VertexId(1), VertexId(0))]
        );
        assert_eq!(c.edge_map, vec![None, Some(EdgeId(0)), Some(EdgeId(1))]);
        assert!(c.graph.is_eulerian());
    }

    #[test]
    fn contract_d4_removes_everything() {
        let c = fixtures::d4().contract_edge(EdgeId(0)).unwrap();
        assert_eq!(c.graph.vertex_count(), 1);
        assert_eq!(c.graph.edge_count(), 0);
    }

    #[test]
    fn contract_rejects_loops_and_non_eulerian() {
        let g = Digraph::with_loops(2, [(0, 1), (1, 0), (0, 0)]).unwrap();
        assert_eq!(g.contract_edge(EdgeId(2)), Err(Error::LoopEdge(EdgeId(2))));
        let path = Digraph::new(2, [(0, 1)]).unwrap();
        assert!(matches!(
            path.contract_edge(EdgeId(0)),
            Err(Error::Unbalanced(_))
        ));
    }

    #[test]
    fn contraction_relabels_when_head_precedes_tail() {
        // 2 -> 0 contracted: vertex 0 disappears, 2 becomes the merged vertex
        let c = fixtures::c3().contract_edge(EdgeId(2)).unwrap();
        assert_eq!(c.vertex_map, vec![VertexId(1), VertexId(0), VertexId(1)]);
        assert_eq!(c.merged, VertexId(1));
        assert!(c.graph.is_eulerian());
    }

    #[test]
    fn expand_loops_cases() {
        let c3 = fixtures::c3();
        assert_eq!(c3.expand_loops().graph, c3);

        let one = Digraph::with_loops(1, [(0, 0)]).unwrap();
        let x = one.expand_loops();
        assert_eq!(x.graph.vertex_count(), 2);
        assert_eq!(
            x.graph.edges(),
            &[(VertexId(0), VertexId(1)), (VertexId(1), VertexId(0))]
        );
        assert_eq!(x.collapse(), one);

        let d2 = fixtures::de_bruijn(2);
        let x = d2.expand_loops();
        assert_eq!(x.graph.vertex_count(), 6);
        assert_eq!(x.graph.edge_count(), 10);
        assert!(!x.graph.has_loops());
        assert_eq!(x.collapse(), d2);
        assert_eq!(x.original_edge(EdgeId(8)), x.loops()[0].0);
    }

    #[test]
    fn orientation_counts() {
        let edge = Multigraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(edge.orientations(20).unwrap().count(), 2);

        let digon = Multigraph::new(2, [(0, 1), (0, 1)]).unwrap();
        let eulerian = digon
            .orientations(20)
            .unwrap()
            .filter(|o| o.digraph().is_eulerian())
            .count();
        assert_eq!(digon.orientations(20).unwrap().len(), 4);
        assert_eq!(eulerian, 2);

        let triangle = Multigraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let eulerian = triangle
            .orientations(20)
            .unwrap()
            .filter(|o| o.digraph().is_eulerian())
            .count();
        assert_eq!(triangle.orientations(20).unwrap().len(), 8);
        assert_eq!(eulerian, 2);
    }

    #[test]
    fn orientation_order_and_cap() {
        let g = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let all: Vec<_> = g.orientations(20).unwrap().collect();
        assert_eq!(all[1].reversed(), &[true, false]);
        assert_eq!(all[2].reversed(), &[false, true]);
        assert_eq!(
            g.orientations(1).err(),
            Some(Error::BudgetExceeded {
                what: "orientation edge",
                cap: 1
            })
        );
    }

    #[test]
    fn eulerian_edge_sets() {
        let d4 = fixtures::d4();
        assert!(is_eulerian_edge_set(&d4, &[EdgeId(0), EdgeId(2)]));
        assert!(!is_eulerian_edge_set(&d4, &[EdgeId(0), EdgeId(1)]));
        assert!(!is_eulerian_edge_set(&d4, &[]));
        let fig8 = fixtures::fig8();
        assert!(is_eulerian_edge_set(&fig8, &[EdgeId(3), EdgeId(4), EdgeId(5)]));
        let two = Digraph::new(4, [(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        assert!(!is_eulerian_edge_set(&two, &[EdgeId(0), EdgeId(1), EdgeId(2), EdgeId(3)]));
    }

    #[test]
    fn multigraph_equality_ignores_endpoint_order() {
        let a = Multigraph::new(2, [(0, 1)]).unwrap();
        let b = Multigraph::new(2, [(1, 0)]).unwrap();
        assert_eq!(a, b);
    }
}
