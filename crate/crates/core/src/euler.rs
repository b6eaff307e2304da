//! Eulerian circuits: construction, enumeration, B.E.S.T. counting,
//! uniqueness and interlacing pairs.
//!
//! Circuits are taken up to rotation, so a circuit is stored in canonical
//! form (starting at its smallest edge id). A loop is an ordinary out-edge
//! for trail search. Counting runs on [`Digraph::expand_loops`], where a
//! loop at `v` becomes the digon through a fresh vertex; this leaves the
//! number of circuits unchanged.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::One;

use crate::arborescence::count_arborescences;
use crate::error::{Error, Result};
use crate::generators::gen_de_bruijn;
use crate::graph::{check_eulerian, Digraph, EdgeId, Graph, VertexId};
use crate::walks::{canonicalize, Circuit, ClosedTrail, Walk};

pub const DEFAULT_MAX_CIRCUITS: usize = 100_000;
pub const DEFAULT_MAX_DE_BRUIJN_INTERLACE: usize = 4;

/// A circuit that uses every edge of its graph exactly once.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EulerianCircuit(Circuit);

impl EulerianCircuit {
    fn from_edges(g: &Digraph, edges: &[EdgeId]) -> Result<Self> {
        let walk = Walk::from_edges(g, g.tail(edges[0]), edges)?;
        Ok(EulerianCircuit(canonicalize(&ClosedTrail::new(walk)?)))
    }

    pub fn circuit(&self) -> &Circuit {
        &self.0
    }

    pub fn into_circuit(self) -> Circuit {
        self.0
    }

    pub fn edges(&self) -> &[EdgeId] {
        self.0.edges()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether this is a closed trail using every edge of `g` once.
    pub fn is_eulerian_in(&self, g: &Digraph) -> bool {
        let mut seen = vec![false; g.edge_count()];
        if self.len() != g.edge_count() {
            return false;
        }
        for &e in self.edges() {
            if e.0 >= seen.len() || seen[e.0] {
                return false;
            }
            seen[e.0] = true;
        }
        Walk::from_edges(g, g.tail(self.edges()[0]), self.edges())
            .map(|w| w.is_closed())
            .unwrap_or(false)
    }
}

impl core::fmt::Display for EulerianCircuit {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        self.0.fmt(f)
    }
}

/// Hierholzer's algorithm, always leaving a vertex by its smallest unused
/// out-edge and starting at the tail of edge 0.
pub fn find_eulerian_circuit(g: &Digraph) -> Result<EulerianCircuit> {
    check_eulerian(g)?;
    let steps = g.steps();
    let mut next = vec![0usize; g.vertex_count()];
    let mut stack: Vec<(VertexId, Option<EdgeId>)> = vec![(g.tail(EdgeId(0)), None)];
    let mut reversed: Vec<EdgeId> = Vec::with_capacity(g.edge_count());
    while let Some(&(v, via)) = stack.last() {
        if let Some(&(e, w)) = steps[v.0].get(next[v.0]) {
            next[v.0] += 1;
            stack.push((w, Some(e)));
        } else {
            stack.pop();
            if let Some(e) = via {
                reversed.push(e);
            }
        }
    }
    reversed.reverse();
    EulerianCircuit::from_edges(g, &reversed)
}

struct TrailSearch<'a> {
    steps: &'a [Vec<(EdgeId, VertexId)>],
    used: Vec<bool>,
    trail: Vec<EdgeId>,
    target: usize,
}

impl TrailSearch<'_> {
    fn extend<F>(&mut self, at: VertexId, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[EdgeId]) -> ControlFlow<()>,
    {
        if self.trail.len() == self.target {
            return visit(&self.trail);
        }
        for &(e, w) in &self.steps[at.0] {
            if self.used[e.0] {
                continue;
            }
            self.used[e.0] = true;
            self.trail.push(e);
            let flow = self.extend(w, visit);
            self.trail.pop();
            self.used[e.0] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Call `visit` on every Eulerian closed trail of `g` that ends with the
/// edge `e`, in lexicographic order of edge ids. Each Eulerian circuit has
/// exactly one such trail. Loops are allowed. Stops early when `visit`
/// breaks.
pub fn for_each_trail_ending_at<F>(g: &Digraph, e: EdgeId, mut visit: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    check_eulerian(g)?;
    if e.0 >= g.edge_count() {
        return Err(Error::EdgeOutOfRange {
            edge: e.0,
            edge_count: g.edge_count(),
        });
    }
    let steps = g.steps();
    let mut used = vec![false; g.edge_count()];
    used[e.0] = true;
    let mut search = TrailSearch {
        steps: &steps,
        used,
        trail: Vec::with_capacity(g.edge_count()),
        target: g.edge_count() - 1,
    };
    Ok(search.extend(g.head(e), &mut |prefix: &[EdgeId]| {
        let mut full = Vec::with_capacity(prefix.len() + 1);
        full.extend_from_slice(prefix);
        full.push(e);
        visit(&full)
    }))
}

/// Every Eulerian circuit of `g`, found as the trails ending at `anchor`.
/// The result does not depend on the anchor.
pub fn enumerate_eulerian_circuits_anchored(
    g: &Digraph,
    anchor: EdgeId,
    cap: usize,
) -> Result<Vec<EulerianCircuit>> {
    let mut trails: Vec<Vec<EdgeId>> = Vec::new();
    let flow = for_each_trail_ending_at(g, anchor, |t| {
        trails.push(t.to_vec());
        if trails.len() > cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    if flow.is_break() {
        return Err(Error::budget("Eulerian circuit", cap));
    }
    let mut out = trails
        .iter()
        .map(|t| EulerianCircuit::from_edges(g, t))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Every Eulerian circuit of `g`, sorted.
pub fn enumerate_eulerian_circuits(g: &Digraph, cap: usize) -> Result<Vec<EulerianCircuit>> {
    enumerate_eulerian_circuits_anchored(g, EdgeId(0), cap)
}

/// Number of Eulerian circuits, at most `cap`, by enumeration. `None` when
/// there are more than `cap`.
pub fn count_eulerian_circuits_upto(g: &Digraph, cap: usize) -> Result<Option<usize>> {
    let mut count = 0usize;
    let flow = for_each_trail_ending_at(g, EdgeId(0), |_| {
        count += 1;
        if count > cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(if flow.is_break() { None } else { Some(count) })
}

/// `tau * prod_v (deg+(v) - 1)!`, evaluated on the loop expansion of `g`.
pub fn best_count(g: &Digraph) -> Result<BigUint> {
    check_eulerian(g)?;
    let expanded = g.expand_loops().graph;
    let tau = count_arborescences(&expanded, VertexId(0))?.count;
    let mut total = tau;
    for &d in &expanded.degrees().out_degree {
        for k in 2..d {
            total *= BigUint::from(k);
        }
    }
    Ok(total)
}

pub fn has_unique_eulerian_circuit(g: &Digraph) -> Result<bool> {
    Ok(best_count(g)?.is_one())
}

/// A witness that the vertices `a`, `b` are visited in the order
/// `a, b, a, b` with no other visit to `a` or `b` in between.
///
/// `indices` point into the closed vertex sequence `v_0 .. v_d` of the
/// rotation that starts after `rotation` edges of the canonical circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InterlacingPair {
    pub a: VertexId,
    pub b: VertexId,
    pub rotation: usize,
    pub indices: [usize; 4],
}

/// Vertex `k` of the closed sequence of rotation `r`.
fn at(visits: &[VertexId], r: usize, k: usize) -> VertexId {
    visits[(r + k) % visits.len()]
}

fn next_of(visits: &[VertexId], r: usize, from: usize, a: VertexId, b: VertexId) -> Option<usize> {
    let d = visits.len();
    (from..=d).find(|&k| {
        let x = at(visits, r, k);
        x == a || x == b
    })
}

fn search_interlacing(z: &Circuit, distinct: bool) -> Option<InterlacingPair> {
    let visits = z.visits();
    let d = visits.len();
    if d == 0 {
        return None;
    }
    for r in 0..d {
        for i1 in 0..=d {
            let a = at(visits, r, i1);
            for i2 in i1 + 1..=d {
                let b = at(visits, r, i2);
                let ok = (!distinct || a != b)
                    && next_of(visits, r, i1 + 1, a, b) == Some(i2);
                if ok {
                    if let Some(i3) = next_of(visits, r, i2 + 1, a, b) {
                        if at(visits, r, i3) == a {
                            if let Some(i4) = next_of(visits, r, i3 + 1, a, b) {
                                if at(visits, r, i4) == b {
                                    return Some(InterlacingPair {
                                        a,
                                        b,
                                        rotation: r,
                                        indices: [i1, i2, i3, i4],
                                    });
                                }
                            }
                        }
                    }
                }
                if b == a {
                    break;
                }
            }
        }
    }
    None
}

/// First interlacing pair over all rotations of `z`, searching rotations,
/// then `i1`, then `i2` in increasing order.
pub fn find_interlacing_pair(z: &Circuit) -> Option<InterlacingPair> {
    search_interlacing(z, false)
}

/// First interlacing pair with `a != b`.
pub fn find_distinct_interlacing_pair(z: &Circuit) -> Option<InterlacingPair> {
    search_interlacing(z, true)
}

/// Whether `(a, b)` is an interlacing pair of `z`.
pub fn is_interlacing_pair(z: &Circuit, a: VertexId, b: VertexId) -> bool {
    let visits = z.visits();
    let d = visits.len();
    (0..d).any(|r| {
        (0..=d).any(|i1| {
            if at(visits, r, i1) != a {
                return false;
            }
            let Some(i2) = next_of(visits, r, i1 + 1, a, b) else {
                return false;
            };
            let Some(i3) = next_of(visits, r, i2 + 1, a, b) else {
                return false;
            };
            let Some(i4) = next_of(visits, r, i3 + 1, a, b) else {
                return false;
            };
            at(visits, r, i2) == b && at(visits, r, i3) == a && at(visits, r, i4) == b
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeBruijnInterlace {
    pub n: usize,
    pub graph: Digraph,
    pub circuit_count: BigUint,
    pub sample: EulerianCircuit,
    pub pair: InterlacingPair,
}

/// Count the Eulerian circuits of the De Bruijn digraph of order `n` and
/// find an interlacing pair of distinct strings in one of them.
pub fn de_bruijn_interlace(n: usize, max_n: usize) -> Result<DeBruijnInterlace> {
    if n < 2 || n > max_n {
        return Err(Error::OutOfRange {
            what: "De Bruijn order",
            value: n,
            min: 2,
            max: max_n,
        });
    }
    let graph = gen_de_bruijn(n, max_n)?;
    let circuit_count = best_count(&graph)?;
    let sample = find_eulerian_circuit(&graph)?;
    let pair = find_distinct_interlacing_pair(sample.circuit())
        .expect("a digraph with several Eulerian circuits has interlacing pairs");
    Ok(DeBruijnInterlace {
        n,
        graph,
        circuit_count,
        sample,
        pair,
    })
}
