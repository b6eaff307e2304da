//! Bridgeless cactus recognition via the block decomposition, the Christmas
//! cactus property, cycle intersection graphs and cycle paths.
//!
//! A connected graph is a bridgeless cactus (a member of `S`) exactly when
//! every block of its underlying undirected graph is a single cycle. A loop
//! is always a block of its own.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::cycle_enum::directed_cycles;
use crate::error::{Error, Result};
use crate::graph::{first_unreachable, Digraph, EdgeId, Graph, VertexId};
use crate::walks::{canonicalize, ClosedTrail, Cycle, Walk};

/// A maximal biconnected subgraph, given by its edges and vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted by smallest edge id.
    pub blocks: Vec<Block>,
    pub blocks_per_vertex: Vec<usize>,
}

struct Frame {
    vertex: usize,
    parent_edge: Option<EdgeId>,
    next: usize,
}

/// Biconnected components of the underlying undirected graph (edge-stack
/// Hopcroft-Tarjan, iterative). Parallel edges are told apart by id, so a
/// pair of parallel edges forms a block of its own.
pub fn blocks<G: Graph + ?Sized>(g: &G) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<(EdgeId, usize)>> = vec![Vec::new(); n];
    let mut found: Vec<Vec<EdgeId>> = Vec::new();
    for e in g.edge_ids() {
        let (a, b) = g.endpoints(e);
        if a == b {
            found.push(vec![e]);
        } else {
            adj[a.0].push((e, b.0));
            adj[b.0].push((e, a.0));
        }
    }

    let unseen = usize::MAX;
    let mut disc = vec![unseen; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut stack: Vec<Frame> = Vec::new();

    for root in 0..n {
        if disc[root] != unseen || adj[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push(Frame {
            vertex: root,
            parent_edge: None,
            next: 0,
        });
        while let Some(top) = stack.last_mut() {
            let v = top.vertex;
            if let Some(&(e, w)) = adj[v].get(top.next) {
                top.next += 1;
                if Some(e) == top.parent_edge {
                    continue;
                }
                if disc[w] == unseen {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push(Frame {
                        vertex: w,
                        parent_edge: Some(e),
                        next: 0,
                    });
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                let done = stack.pop().expect("non-empty");
                if let (Some(pe), Some(parent)) = (done.parent_edge, stack.last()) {
                    let p = parent.vertex;
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(x) = edge_stack.pop() {
                            block.push(x);
                            if x == pe {
                                break;
                            }
                        }
                        found.push(block);
                    }
                }
            }
        }
    }

    let mut blocks_per_vertex = vec![0; n];
    let mut blocks: Vec<Block> = found
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut vertices: Vec<VertexId> = edges
                .iter()
                .flat_map(|&e| {
                    let (a, b) = g.endpoints(e);
                    [a, b]
                })
                .collect();
            vertices.sort_unstable();
            vertices.dedup();
            for v in &vertices {
                blocks_per_vertex[v.0] += 1;
            }
            Block { edges, vertices }
        })
        .collect();
    blocks.sort();
    BlockDecomposition {
        blocks,
        blocks_per_vertex,
    }
}

/// The block as a cycle, if it is one: every vertex of the block has one
/// incoming and one outgoing block edge (digraph) or two block edges
/// (multigraph).
pub fn block_cycle<G: Graph + ?Sized>(g: &G, block: &Block) -> Option<Cycle> {
    if block.edges.len() != block.vertices.len() {
        return None;
    }
    let slot = |v: VertexId| block.vertices.binary_search(&v).ok();
    let k = block.vertices.len();
    let mut out: Vec<Vec<(EdgeId, VertexId)>> = vec![Vec::new(); k];
    let mut indeg = vec![0usize; k];
    for &e in &block.edges {
        let (a, b) = g.endpoints(e);
        let (ia, ib) = (slot(a)?, slot(b)?);
        out[ia].push((e, b));
        if g.is_directed() {
            indeg[ib] += 1;
        } else if a != b {
            out[ib].push((e, a));
        }
    }
    let shaped = if g.is_directed() {
        out.iter().all(|o| o.len() == 1) && indeg.iter().all(|&d| d == 1)
    } else {
        out.iter().all(|o| o.len() == 2)
    };
    if !shaped {
        return None;
    }
    let start = block.vertices[0];
    let mut vertices = vec![start];
    let mut edges: Vec<EdgeId> = Vec::new();
    let mut at = start;
    loop {
        let &(e, w) = out[slot(at)?].iter().find(|(e, _)| !edges.contains(e))?;
        edges.push(e);
        vertices.push(w);
        at = w;
        if at == start {
            break;
        }
    }
    if edges.len() != block.edges.len() {
        return None;
    }
    let trail = ClosedTrail::new(Walk::new(vertices, edges).ok()?).ok()?;
    Cycle::new(canonicalize(&trail))
}

/// A construction `beta_1 * beta_2 * ... * beta_t`: each cycle after the
/// first meets the union of the earlier ones in exactly one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SDecomposition {
    pub cycles: Vec<Cycle>,
    /// `attach_vertices[i]` is where `cycles[i + 1]` meets the prefix.
    pub attach_vertices: Vec<VertexId>,
}

/// Why a graph is not a bridgeless cactus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SFailure {
    NoEdges,
    Disconnected(VertexId),
    /// The smallest block that is not a single cycle.
    NonCycleBlock(Block),
}

/// Decompose into cycles glued at single vertices, by repeatedly peeling
/// the leaf block of the block-cut tree with the smallest id and reversing
/// the peel order.
pub fn s_decompose<G: Graph + ?Sized>(g: &G) -> core::result::Result<SDecomposition, SFailure> {
    if g.edge_count() == 0 {
        return Err(SFailure::NoEdges);
    }
    if let Some(v) = first_unreachable(g) {
        return Err(SFailure::Disconnected(v));
    }
    let dec = blocks(g);
    let mut cycles = Vec::with_capacity(dec.blocks.len());
    for b in &dec.blocks {
        match block_cycle(g, b) {
            Some(c) => cycles.push(c),
            None => return Err(SFailure::NonCycleBlock(b.clone())),
        }
    }

    let mut count = dec.blocks_per_vertex.clone();
    let mut alive = vec![true; dec.blocks.len()];
    let mut peeled: Vec<(usize, Option<VertexId>)> = Vec::with_capacity(dec.blocks.len());
    for _ in 1..dec.blocks.len() {
        let (leaf, attach) = (0..dec.blocks.len())
            .filter(|&b| alive[b])
            .find_map(|b| {
                let mut shared = dec.blocks[b].vertices.iter().filter(|v| count[v.0] >= 2);
                let first = shared.next().copied();
                match (first, shared.next()) {
                    (Some(x), None) => Some((b, x)),
                    _ => None,
                }
            })
            .expect("a block-cut tree with two or more blocks has a leaf block");
        alive[leaf] = false;
        for v in &dec.blocks[leaf].vertices {
            count[v.0] -= 1;
        }
        peeled.push((leaf, Some(attach)));
    }
    let last = alive.iter().position(|&a| a).expect("one block remains");
    peeled.push((last, None));
    peeled.reverse();

    Ok(SDecomposition {
        cycles: peeled.iter().map(|&(b, _)| cycles[b].clone()).collect(),
        attach_vertices: peeled.iter().filter_map(|&(_, a)| a).collect(),
    })
}

pub fn is_bridgeless_cactus<G: Graph + ?Sized>(g: &G) -> bool {
    s_decompose(g).is_ok()
}

/// A bridgeless cactus in which every vertex lies in at most two blocks.
pub fn is_christmas_cactus<G: Graph + ?Sized>(g: &G) -> bool {
    s_decompose(g).is_ok() && blocks(g).blocks_per_vertex.iter().all(|&c| c <= 2)
}

/// Graph on a set of cycles with an edge between two cycles that share a
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    pub cycles: Vec<Cycle>,
    pub adjacency: Vec<Vec<usize>>,
}

impl IntersectionGraph {
    pub fn new(cycles: Vec<Cycle>) -> Self {
        let sets: Vec<Vec<VertexId>> = cycles.iter().map(Cycle::vertex_set).collect();
        let k = cycles.len();
        let mut adjacency = vec![Vec::new(); k];
        for i in 0..k {
            for j in i + 1..k {
                if sets[i].iter().any(|v| sets[j].binary_search(v).is_ok()) {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        IntersectionGraph { cycles, adjacency }
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        let k = self.cycles.len();
        if k == 0 {
            return false;
        }
        let mut seen = vec![false; k];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for &j in &self.adjacency[i] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.cycles.len()
    }
}

/// Intersection graph of all directed cycles of `g`.
pub fn intersection_graph(g: &Digraph, cap: usize) -> Result<IntersectionGraph> {
    Ok(IntersectionGraph::new(directed_cycles(g, cap)?))
}

/// Cycles `gamma_1 .. gamma_r` leading from `u` to `v`, where consecutive
/// cycles meet exactly in the junction vertex between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePath {
    pub cycles: Vec<Cycle>,
    pub junctions: Vec<VertexId>,
}

/// Shortest path from `u` to `v` in the bipartite vertex-block incidence
/// graph of a bridgeless cactus. Minimality makes the junctions distinct
/// from each other and from `u` and `v`.
pub fn cycle_path<G: Graph + ?Sized>(g: &G, u: VertexId, v: VertexId) -> Result<CyclePath> {
    let n = g.vertex_count();
    for x in [u, v] {
        if x.0 >= n {
            return Err(Error::VertexOutOfRange {
                vertex: x.0,
                vertex_count: n,
            });
        }
    }
    if u == v {
        return Err(Error::SameVertex);
    }
    s_decompose(g).map_err(|_| Error::NotCactus)?;
    let dec = blocks(g);
    let t = dec.blocks.len();
    // nodes 0..n are vertices, n..n+t are blocks
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + t];
    for (b, block) in dec.blocks.iter().enumerate() {
        for x in &block.vertices {
            adj[x.0].push(n + b);
            adj[n + b].push(x.0);
        }
    }
    let mut prev = vec![usize::MAX; n + t];
    prev[u.0] = u.0;
    let mut queue = VecDeque::from([u.0]);
    while let Some(x) = queue.pop_front() {
        if x == v.0 {
            break;
        }
        for &y in &adj[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![v.0];
    while *path.last().expect("non-empty") != u.0 {
        path.push(prev[*path.last().expect("non-empty")]);
    }
    path.reverse();
    // path = u, B1, x1, B2, ..., Br, v
    let cycles = path
        .iter()
        .filter(|&&x| x >= n)
        .map(|&b| block_cycle(g, &dec.blocks[b - n]).expect("cactus blocks are cycles"))
        .collect();
    let junctions = path[1..path.len() - 1]
        .iter()
        .filter(|&&x| x < n)
        .map(|&x| VertexId(x))
        .collect();
    Ok(CyclePath { cycles, junctions })
}
