//! Brute-force reference implementations shared by the integration tests.
//! Each one works from definitions only and never calls the search code it
//! is compared against.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cactus_core::graph::{Digraph, EdgeId, Graph, Multigraph, VertexId};
use cactus_core::walks::Circuit;

fn connected_on(n: usize, pairs: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        r
    }
    let mut touched = BTreeSet::new();
    for &(a, b) in pairs {
        touched.insert(a);
        touched.insert(b);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let roots: BTreeSet<usize> = touched.iter().map(|&v| find(&mut parent, v)).collect();
    roots.len() <= 1
}

fn subset(mask: u64, m: usize) -> Vec<usize> {
    (0..m).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Edge sets of directed cycles: non-empty, connected, every touched vertex
/// with exactly one in- and one out-edge.
pub fn cycles_by_subsets(g: &Digraph) -> Vec<Vec<EdgeId>> {
    let m = g.edge_count();
    assert!(m <= 20);
    let mut out = Vec::new();
    for mask in 1u64..1 << m {
        let s = subset(mask, m);
        let mut din = vec![0; g.vertex_count()];
        let mut dout = vec![0; g.vertex_count()];
        let pairs: Vec<(usize, usize)> = s
            .iter()
            .map(|&e| {
                let (t, h) = g.endpoints(EdgeId(e));
                dout[t.0] += 1;
                din[h.0] += 1;
                (t.0, h.0)
            })
            .collect();
        let regular = (0..g.vertex_count()).all(|v| din[v] == dout[v] && din[v] <= 1);
        if regular && connected_on(g.vertex_count(), &pairs) {
            out.push(s.into_iter().map(EdgeId).collect());
        }
    }
    out.sort();
    out
}

/// Edge sets of undirected cycles: non-empty, connected, all degrees 2.
pub fn undirected_cycles_by_subsets(x: &Multigraph) -> Vec<Vec<EdgeId>> {
    let m = x.edge_count();
    let mut out = Vec::new();
    for mask in 1u64..1 << m {
        let s = subset(mask, m);
        let mut deg = vec![0; x.vertex_count()];
        let pairs: Vec<(usize, usize)> = s
            .iter()
            .map(|&e| {
                let (a, b) = x.endpoints(EdgeId(e));
                deg[a.0] += 1;
                deg[b.0] += 1;
                (a.0, b.0)
            })
            .collect();
        if deg.iter().all(|&d| d == 0 || d == 2) && connected_on(x.vertex_count(), &pairs) {
            out.push(s.into_iter().map(EdgeId).collect());
        }
    }
    out.sort();
    out
}

/// Partitions of the edge set into the given cycles, by trying every subset
/// of the cycle list.
pub fn partitions_by_subsets(m: usize, cycles: &[Vec<EdgeId>]) -> Vec<Vec<Vec<EdgeId>>> {
    assert!(cycles.len() <= 22);
    let mut out = Vec::new();
    for mask in 1u64..1 << cycles.len() {
        let chosen: Vec<&Vec<EdgeId>> = subset(mask, cycles.len()).into_iter().map(|i| &cycles[i]).collect();
        let mut hits = vec![0; m];
        for c in &chosen {
            for e in c.iter() {
                hits[e.0] += 1;
            }
        }
        if hits.iter().all(|&h| h == 1) {
            let mut key: Vec<Vec<EdgeId>> = chosen.into_iter().cloned().collect();
            key.sort();
            out.push(key);
        }
    }
    out.sort();
    out
}

/// Arborescences rooted at `root`: sets of `n - 1` non-loop edges giving
/// every other vertex one incoming edge and reaching everything from root.
pub fn arborescences_by_subsets(g: &Digraph, root: VertexId) -> Vec<Vec<EdgeId>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut out = Vec::new();
    for mask in 0u64..1 << m {
        if mask.count_ones() as usize != n - 1 {
            continue;
        }
        let s = subset(mask, m);
        if s.iter().any(|&e| g.is_loop(EdgeId(e))) {
            continue;
        }
        let mut reached = vec![false; n];
        reached[root.0] = true;
        let mut grew = true;
        while grew {
            grew = false;
            for &e in &s {
                let (t, h) = g.endpoints(EdgeId(e));
                if reached[t.0] && !reached[h.0] {
                    reached[h.0] = true;
                    grew = true;
                }
            }
        }
        if reached.iter().all(|&r| r) {
            out.push(s.into_iter().map(EdgeId).collect());
        }
    }
    out
}

/// Number of Eulerian circuits: orderings of the edges that start with edge
/// 0 and form a closed walk, over all permutations of the others.
pub fn circuits_by_permutations(g: &Digraph) -> usize {
    let m = g.edge_count();
    assert!((1..=9).contains(&m));
    let mut rest: Vec<usize> = (1..m).collect();
    let mut count = 0;
    permute(&mut rest, 0, &mut |perm| {
        let order: Vec<usize> = std::iter::once(0).chain(perm.iter().copied()).collect();
        let ok = order.windows(2).all(|w| g.endpoints(EdgeId(w[0])).1 == g.endpoints(EdgeId(w[1])).0)
            && g.endpoints(EdgeId(order[m - 1])).1 == g.endpoints(EdgeId(0)).0;
        if ok {
            count += 1;
        }
    });
    count
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// `(a, b)` interlaces in `z`: some rotation has `i1 < i2 < i3 < i4` on the
/// closed vertex sequence with `a, b, a, b` there and no other `a` or `b`
/// strictly between `i1` and `i4`.
pub fn interlaces(z: &Circuit, a: VertexId, b: VertexId) -> bool {
    let visits = z.visits();
    let d = visits.len();
    for r in 0..d {
        let w: Vec<VertexId> = (0..=d).map(|k| visits[(r + k) % d]).collect();
        for i1 in 0..=d {
            for i2 in i1 + 1..=d {
                for i3 in i2 + 1..=d {
                    for i4 in i3 + 1..=d {
                        if w[i1] != a || w[i2] != b || w[i3] != a || w[i4] != b {
                            continue;
                        }
                        let clear = (i1 + 1..i4)
                            .filter(|&j| j != i2 && j != i3)
                            .all(|j| w[j] != a && w[j] != b);
                        if clear {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

pub fn has_any_interlacing_pair(g: &Digraph, z: &Circuit) -> bool {
    (0..g.vertex_count()).any(|a| (0..g.vertex_count()).any(|b| interlaces(z, VertexId(a), VertexId(b))))
}
