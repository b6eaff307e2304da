//! Search and counting routines checked against brute force on a seeded
//! corpus of small graphs.

mod common;

use cactus_core::arborescence::{count_arborescences, enumerate_arborescences, DEFAULT_MAX_ARBORESCENCES};
use cactus_core::cycle_enum::{circuit_cycles, directed_cycles, undirected_cycles, DEFAULT_MAX_CYCLES};
use cactus_core::euler::{
    best_count, enumerate_eulerian_circuits, find_interlacing_pair, is_interlacing_pair, DEFAULT_MAX_CIRCUITS,
};
use cactus_core::fixtures;
use cactus_core::generators::{gen_cactus, gen_christmas_cactus, gen_random_eulerian, gen_two_in_two_out};
use cactus_core::lattice::{check_condition_8, DEFAULT_MAX_EULERIAN_PARTITIONS};
use cactus_core::partition::{enumerate_partitions, veblen_partition, DEFAULT_MAX_PARTITIONS};
use cactus_core::{Digraph, EdgeId, Graph, Multigraph, VertexId};
use num_bigint::BigUint;

fn corpus(max_edges: usize) -> Vec<Digraph> {
    let mut out: Vec<Digraph> = fixtures::NAMES.iter().map(|n| fixtures::by_name(n).unwrap()).collect();
    out.push(fixtures::de_bruijn(1));
    for seed in 0..150u64 {
        let n = 2 + (seed % 5) as usize;
        let k = 1 + (seed % 4) as usize;
        out.push(gen_random_eulerian(seed, n, k).unwrap());
    }
    for seed in 0..30u64 {
        out.push(gen_cactus(seed, 1 + (seed % 4) as usize, 3).unwrap());
        out.push(gen_christmas_cactus(seed, 1 + (seed % 4) as usize).unwrap());
        out.push(gen_two_in_two_out(seed, 2 + (seed % 4) as usize).unwrap());
    }
    out.retain(|g| g.edge_count() <= max_edges);
    out
}

fn edge_sets<T>(items: &[T], f: impl Fn(&T) -> Vec<EdgeId>) -> Vec<Vec<EdgeId>> {
    let mut out: Vec<Vec<EdgeId>> = items.iter().map(f).collect();
    out.sort();
    out
}

#[test]
fn directed_cycles_match_edge_subsets() {
    for g in corpus(12) {
        let found = directed_cycles(&g, DEFAULT_MAX_CYCLES).unwrap();
        assert_eq!(
            edge_sets(&found, |c| c.edge_set()),
            common::cycles_by_subsets(&g),
            "{g:?}"
        );
    }
}

#[test]
fn cycle_partitions_match_exact_cover_over_all_cycles() {
    for g in corpus(12) {
        let cycles = common::cycles_by_subsets(&g);
        if cycles.len() > 20 {
            continue;
        }
        let expected = common::partitions_by_subsets(g.edge_count(), &cycles);
        let found: Vec<Vec<Vec<EdgeId>>> = enumerate_partitions(&g, DEFAULT_MAX_PARTITIONS)
            .unwrap()
            .iter()
            .map(|p| p.key())
            .collect();
        assert_eq!(found, expected, "{g:?}");
        assert!(veblen_partition(&g).unwrap().is_partition_of(&g));
    }
}

#[test]
fn arborescences_match_edge_subsets() {
    for g in corpus(12) {
        for r in 0..g.vertex_count() {
            let root = VertexId(r);
            let mut brute = common::arborescences_by_subsets(&g, root);
            brute.sort();
            let listed = enumerate_arborescences(&g, root, DEFAULT_MAX_ARBORESCENCES).unwrap();
            assert_eq!(listed, brute, "{g:?} root {r}");
            assert_eq!(
                count_arborescences(&g, root).unwrap().count,
                BigUint::from(brute.len()),
                "{g:?} root {r}"
            );
        }
    }
}

#[test]
fn circuit_counts_match_permutations() {
    for g in corpus(8) {
        let brute = common::circuits_by_permutations(&g);
        let listed = enumerate_eulerian_circuits(&g, DEFAULT_MAX_CIRCUITS).unwrap();
        assert_eq!(listed.len(), brute, "{g:?}");
        assert_eq!(best_count(&g).unwrap(), BigUint::from(brute), "{g:?}");
        assert!(listed.iter().all(|z| z.is_eulerian_in(&g)));
    }
}

#[test]
fn interlacing_matches_index_search() {
    for g in corpus(10) {
        let out_degree = g.degrees().out_degree;
        for z in enumerate_eulerian_circuits(&g, 500).unwrap_or_default() {
            let any = common::has_any_interlacing_pair(&g, z.circuit());
            assert_eq!(find_interlacing_pair(z.circuit()).is_some(), any, "{g:?} {z}");
            for a in 0..g.vertex_count() {
                for b in 0..g.vertex_count() {
                    let (a, b) = (VertexId(a), VertexId(b));
                    let brute = common::interlaces(z.circuit(), a, b);
                    assert_eq!(is_interlacing_pair(z.circuit(), a, b), brute, "{g:?} {z} {a} {b}");
                    if a == b {
                        assert_eq!(brute, out_degree[a.0] >= 3, "{g:?} {z} {a}");
                    }
                }
            }
        }
    }
}

#[test]
fn minimal_eulerian_partitions_are_cycle_partitions() {
    for g in corpus(8) {
        let check = check_condition_8(&g, 8, DEFAULT_MAX_EULERIAN_PARTITIONS).unwrap();
        let minimal: Vec<Vec<Vec<EdgeId>>> = check.minimal.iter().map(|p| p.parts.clone()).collect();
        let mut minimal = minimal;
        minimal.sort();
        let partitions: Vec<Vec<Vec<EdgeId>>> = enumerate_partitions(&g, DEFAULT_MAX_PARTITIONS)
            .unwrap()
            .iter()
            .map(|p| p.key())
            .collect();
        assert_eq!(minimal, partitions, "{g:?}");
        assert!(check.is_join_semilattice, "{g:?}");
        assert_eq!(check.is_lattice, partitions.len() == 1, "{g:?}");
    }
}

#[test]
fn undirected_cycles_match_edge_subsets() {
    for g in corpus(12) {
        if g.has_loops() {
            continue;
        }
        let x = Multigraph::new(g.vertex_count(), g.edges().iter().map(|(t, h)| (t.0, h.0))).unwrap();
        let found = undirected_cycles(&x, DEFAULT_MAX_CYCLES).unwrap();
        let sets = edge_sets(&found, |c| c.edges.clone());
        assert_eq!(sets, common::undirected_cycles_by_subsets(&x), "{x:?}");
        // directed traversals: one per digon, two per longer cycle
        let traversals = circuit_cycles(&x, DEFAULT_MAX_CYCLES).unwrap().len();
        let expected: usize = found.iter().map(|c| if c.is_digon() { 1 } else { 2 }).sum();
        assert_eq!(traversals, expected, "{x:?}");
    }
}
