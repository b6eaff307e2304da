//! Seeded generators for test families. Every generator is a pure function
//! of its seed and parameters.
//!
//! Randomness comes from [`Lcg64`], a 64-bit linear congruential generator
//! with multiplier `6364136223846793005` and increment
//! `1442695040888963407`, so graphs can be reproduced bit for bit in any
//! language.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{component_labels, Digraph, EdgeId, Graph};

pub const DEFAULT_MAX_DE_BRUIJN: usize = 5;
pub const TWO_IN_TWO_OUT_ATTEMPTS: usize = 1000;

/// Lengths of the cycles in [`gen_christmas_cactus`] are drawn from
/// `2..=CHRISTMAS_MAX_LEN`.
pub const CHRISTMAS_MAX_LEN: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub const MULTIPLIER: u64 = 6364136223846793005;
    pub const INCREMENT: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    /// Advance the state and return it.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(Self::MULTIPLIER)
            .wrapping_add(Self::INCREMENT);
        self.state
    }

    /// A value in `0..n` taken from the high 32 bits of the next state.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "empty range");
        ((self.next_u64() >> 32) % n as u64) as usize
    }

    /// A value in `lo..=hi`.
    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    /// Fisher-Yates shuffle from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

fn at_least(what: &'static str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::OutOfRange {
            what,
            value,
            min,
            max: usize::MAX,
        })
    } else {
        Ok(())
    }
}

/// Add the directed cycle `from -> (fresh...) -> to -> (fresh...) -> from`
/// of length `len`, placing `split` fresh vertices on the way out.
fn push_cycle_through(
    edges: &mut Vec<(usize, usize)>,
    next_vertex: &mut usize,
    from: usize,
    to: usize,
    len: usize,
    split: usize,
) {
    let mut path = vec![from];
    for _ in 0..split {
        path.push(*next_vertex);
        *next_vertex += 1;
    }
    path.push(to);
    for _ in 0..len - 2 - split {
        path.push(*next_vertex);
        *next_vertex += 1;
    }
    path.push(from);
    edges.extend(path.windows(2).map(|w| (w[0], w[1])));
}

/// A bridgeless cactus from a random tree on `t + 1` nodes: node `i` hangs
/// off a uniformly chosen earlier node, and the tree edge becomes a directed
/// cycle through both nodes of length in `2..=max_len`. Tree nodes are
/// vertices `0..=t`; the remaining cycle vertices follow.
pub fn gen_cactus(seed: u64, t: usize, max_len: usize) -> Result<Digraph> {
    at_least("cycle count", t, 1)?;
    at_least("cycle length", max_len, 2)?;
    let mut rng = Lcg64::new(seed);
    let mut edges = Vec::new();
    let mut next_vertex = t + 1;
    for child in 1..=t {
        let parent = rng.below(child);
        let len = rng.between(2, max_len);
        let split = rng.below(len - 1);
        push_cycle_through(&mut edges, &mut next_vertex, parent, child, len, split);
    }
    Digraph::new(next_vertex, edges)
}

/// A Christmas cactus with `t` cycles. The first cycle is `0 -> 1 -> ... ->
/// 0`; each further cycle is attached at a uniformly chosen vertex that so
/// far lies on exactly one cycle, and all its other vertices are new.
pub fn gen_christmas_cactus(seed: u64, t: usize) -> Result<Digraph> {
    at_least("cycle count", t, 1)?;
    let mut rng = Lcg64::new(seed);
    let len = rng.between(2, CHRISTMAS_MAX_LEN);
    let mut edges: Vec<(usize, usize)> = (0..len).map(|v| (v, (v + 1) % len)).collect();
    let mut on_cycles = vec![1usize; len];
    for _ in 1..t {
        let free: Vec<usize> = (0..on_cycles.len()).filter(|&v| on_cycles[v] == 1).collect();
        let at = free[rng.below(free.len())];
        let len = rng.between(2, CHRISTMAS_MAX_LEN);
        let first = on_cycles.len();
        let mut path = vec![at];
        path.extend(first..first + len - 1);
        path.push(at);
        edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        on_cycles[at] += 1;
        on_cycles.extend(core::iter::repeat_n(1, len - 1));
    }
    Digraph::new(on_cycles.len(), edges)
}

/// De Bruijn digraph on binary strings of length `n`, read as integers:
/// edges `s -> (2s mod 2^n) + b` for `s` ascending and `b = 0, 1`. The
/// strings `0..0` and `1..1` carry a loop each.
pub fn gen_de_bruijn(n: usize, max_n: usize) -> Result<Digraph> {
    if n < 1 || n > max_n {
        return Err(Error::OutOfRange {
            what: "De Bruijn order",
            value: n,
            min: 1,
            max: max_n,
        });
    }
    let size = 1usize << n;
    let mask = size - 1;
    let edges = (0..size).flat_map(|s| (0..2).map(move |b| (s, ((s << 1) & mask) | b)));
    Digraph::with_loops(size, edges)
}

/// Union of `k` random directed cycles on `n` vertices, each of length in
/// `2..=n` through distinct vertices, restricted to the weak component of
/// edge 0 and relabeled in increasing vertex order.
pub fn gen_random_eulerian(seed: u64, n: usize, k: usize) -> Result<Digraph> {
    at_least("vertex count", n, 2)?;
    at_least("cycle count", k, 1)?;
    let mut rng = Lcg64::new(seed);
    let mut edges = Vec::new();
    let mut pool: Vec<usize> = (0..n).collect();
    for _ in 0..k {
        let len = rng.between(2, n);
        for i in 0..len {
            let j = i + rng.below(n - i);
            pool.swap(i, j);
        }
        edges.extend((0..len).map(|i| (pool[i], pool[(i + 1) % len])));
    }
    let g = Digraph::new(n, edges)?;
    let labels = component_labels(&g);
    let keep = labels[g.tail(EdgeId(0)).0];
    let chosen: Vec<EdgeId> = g
        .edge_ids()
        .filter(|&e| labels[g.tail(e).0] == keep)
        .collect();
    Ok(g.edge_subgraph(&chosen).graph)
}

/// A loopless, weakly connected digraph on `n` vertices with every in- and
/// out-degree equal to 2, from the configuration model: the out-stubs
/// `0, 0, 1, 1, ...` are matched with a shuffled copy of themselves as
/// in-stubs. Draws with a loop or more than one component are retried.
pub fn gen_two_in_two_out(seed: u64, n: usize) -> Result<Digraph> {
    at_least("vertex count", n, 2)?;
    let mut rng = Lcg64::new(seed);
    let stubs: Vec<usize> = (0..2 * n).map(|i| i / 2).collect();
    for _ in 0..TWO_IN_TWO_OUT_ATTEMPTS {
        let mut heads = stubs.clone();
        rng.shuffle(&mut heads);
        if stubs.iter().zip(&heads).any(|(t, h)| t == h) {
            continue;
        }
        let g = Digraph::new(n, stubs.iter().copied().zip(heads))?;
        if g.is_weakly_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed {
        attempts: TWO_IN_TWO_OUT_ATTEMPTS,
    })
}
