//! The poset `T(D)` of partitions of the edge set into connected Eulerian
//! parts, ordered by refinement.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{is_eulerian_edge_set, EdgeId, Graph};
use crate::set_partitions::{blocks_of, SetPartitions};

pub const DEFAULT_MAX_LATTICE_EDGES: usize = 10;
pub const DEFAULT_MAX_EULERIAN_PARTITIONS: usize = 100_000;

/// A partition of the edge set whose parts each form a connected Eulerian
/// subgraph. Parts are sorted, and sorted among themselves.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EulerianPartition {
    pub parts: Vec<Vec<EdgeId>>,
}

impl EulerianPartition {
    /// Label of the part holding each edge.
    fn labels(&self, m: usize) -> Vec<usize> {
        let mut label = vec![usize::MAX; m];
        for (i, part) in self.parts.iter().enumerate() {
            for e in part {
                label[e.0] = i;
            }
        }
        label
    }

    /// `self <= other` in refinement order: every part of `self` lies inside
    /// one part of `other`.
    pub fn refines(&self, other: &EulerianPartition, m: usize) -> bool {
        let label = other.labels(m);
        self.parts
            .iter()
            .all(|p| p.iter().all(|e| label[e.0] == label[p[0].0]))
    }
}

/// All elements of `T(g)`, filtering set partitions of the edges in
/// restricted-growth-string order. Needs `m <= max_edges`.
pub fn enumerate_eulerian_partitions<G: Graph + ?Sized>(
    g: &G,
    max_edges: usize,
    cap: usize,
) -> Result<Vec<EulerianPartition>> {
    let m = g.edge_count();
    if m > max_edges {
        return Err(Error::budget("lattice edge", max_edges));
    }
    let mut out = Vec::new();
    for rgs in SetPartitions::new(m) {
        let parts: Vec<Vec<EdgeId>> = blocks_of(&rgs)
            .into_iter()
            .map(|b| b.into_iter().map(EdgeId).collect())
            .collect();
        if parts.iter().all(|p| is_eulerian_edge_set(g, p)) {
            out.push(EulerianPartition { parts });
            if out.len() > cap {
                return Err(Error::budget("Eulerian partition", cap));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Fixed-width bitset over poset elements.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(k: usize) -> Self {
        Bits(vec![0; k.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.0.len() * 64).filter(|&i| self.get(i))
    }
}

/// A finite poset given by its elements and order relation.
#[derive(Debug, Clone)]
pub struct Poset {
    pub elements: Vec<EulerianPartition>,
    /// `below[j]` holds every `i` with `elements[i] <= elements[j]`.
    below: Vec<Bits>,
    /// `above[i]` holds every `j` with `elements[i] <= elements[j]`.
    above: Vec<Bits>,
}

impl Poset {
    pub fn from_partitions(elements: Vec<EulerianPartition>, m: usize) -> Self {
        let k = elements.len();
        let mut below = vec![Bits::new(k); k];
        let mut above = vec![Bits::new(k); k];
        for i in 0..k {
            for j in 0..k {
                if elements[i].refines(&elements[j], m) {
                    below[j].set(i);
                    above[i].set(j);
                }
            }
        }
        Poset {
            elements,
            below,
            above,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below[j].get(i)
    }

    /// Pairs `(i, j)` where `j` covers `i`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in self.above[i].ones() {
                if i != j && !(0..k).any(|x| x != i && x != j && self.leq(i, x) && self.leq(x, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Elements with nothing strictly below them.
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| self.below[j].ones().all(|i| i == j))
            .collect()
    }

    /// The greatest common lower bound of `i` and `j`, if there is one.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let common = self.below[i].and(&self.below[j]);
        let found = common.ones().find(|&x| common.is_subset(&self.below[x]));
        found
    }

    /// The least common upper bound of `i` and `j`, if there is one.
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let common = self.above[i].and(&self.above[j]);
        let found = common.ones().find(|&x| common.is_subset(&self.above[x]));
        found
    }

    fn all_pairs(&self, f: impl Fn(usize, usize) -> Option<usize>) -> bool {
        (0..self.len()).all(|i| (i + 1..self.len()).all(|j| f(i, j).is_some()))
    }

    pub fn is_join_semilattice(&self) -> bool {
        !self.is_empty() && self.all_pairs(|i, j| self.join(i, j))
    }

    pub fn is_lattice(&self) -> bool {
        self.is_join_semilattice() && self.all_pairs(|i, j| self.meet(i, j))
    }
}

/// `T(g)` as a poset.
pub fn eulerian_partition_poset<G: Graph + ?Sized>(g: &G, max_edges: usize, cap: usize) -> Result<Poset> {
    let elements = enumerate_eulerian_partitions(g, max_edges, cap)?;
    Ok(Poset::from_partitions(elements, g.edge_count()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeCheck {
    pub is_lattice: bool,
    pub is_join_semilattice: bool,
    pub minimal_count: usize,
    pub element_count: usize,
    pub minimal: Vec<EulerianPartition>,
}

/// Whether `T(g)` is a lattice, and its minimal elements.
pub fn check_condition_8<G: Graph + ?Sized>(g: &G, max_edges: usize, cap: usize) -> Result<LatticeCheck> {
    let poset = eulerian_partition_poset(g, max_edges, cap)?;
    let minimal: Vec<EulerianPartition> = poset
        .minimal()
        .into_iter()
        .map(|i| poset.elements[i].clone())
        .collect();
    Ok(LatticeCheck {
        is_lattice: poset.is_lattice(),
        is_join_semilattice: poset.is_join_semilattice(),
        minimal_count: minimal.len(),
        element_count: poset.len(),
        minimal,
    })
}
