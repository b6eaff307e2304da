//! Condition reports: every characterizing condition evaluated on its own,
//! plus the witnesses that explain each verdict.
//!
//! Digraphs get the eight theorem conditions `c1..c8` and the
//! unique-circuit conditions `p1..p5` (with `p4` decided twice, by the
//! B.E.S.T. count and by enumeration as `p4_enum`). Multigraphs get the six
//! conditions `c1..c6` of the undirected characterization.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use cactus_core::arborescence::count_arborescences;
use cactus_core::cactus::{is_christmas_cactus, s_decompose, IntersectionGraph, SFailure};
use cactus_core::cycle_enum::{
    cyclomatic_number, directed_cycles, undirected_cycles, DEFAULT_MAX_CYCLES,
};
use cactus_core::euler::{
    best_count, count_eulerian_circuits_upto, find_interlacing_pair, for_each_trail_ending_at,
    DEFAULT_MAX_CIRCUITS,
};
use cactus_core::graph::check_eulerian;
use cactus_core::lattice::check_condition_8;
use cactus_core::partition::{has_unique_partition, CyclePartition, PartitionUniqueness, DEFAULT_MAX_PARTITIONS};
use cactus_core::walks::canonicalize;
use cactus_core::{ClosedTrail, Digraph, EdgeId, Error, Graph, Multigraph, VertexId, Walk};
use serde::{Deserialize, Serialize};

use crate::error::ToolError;
use crate::format::ParsedGraph;

pub const SCHEMA_VERSION: u32 = 1;
pub const SKIPPED: &str = "skipped: budget";
/// Largest accepted `max_lattice_edges`; the Bell number of 12 is about
/// four million set partitions.
pub const LATTICE_EDGE_CEILING: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    pub max_cycles: usize,
    pub max_partitions: usize,
    pub max_circuits: usize,
    pub max_lattice_edges: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_cycles: DEFAULT_MAX_CYCLES,
            max_partitions: DEFAULT_MAX_PARTITIONS,
            max_circuits: DEFAULT_MAX_CIRCUITS,
            max_lattice_edges: cactus_core::lattice::DEFAULT_MAX_LATTICE_EDGES,
        }
    }
}

impl Budgets {
    pub fn validate(&self) -> Result<(), ToolError> {
        for (name, value) in [
            ("--max-cycles", self.max_cycles),
            ("--max-partitions", self.max_partitions),
            ("--max-circuits", self.max_circuits),
        ] {
            if value == 0 {
                return Err(ToolError::Budget(format!("{name} must be at least 1")));
            }
        }
        if self.max_lattice_edges > LATTICE_EDGE_CEILING {
            return Err(ToolError::Budget(format!(
                "--max-lattice-edges must be at most {LATTICE_EDGE_CEILING}"
            )));
        }
        Ok(())
    }
}

/// A verdict, or the marker string when a budget ran out first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Condition {
    Value(bool),
    Skipped(String),
}

impl Condition {
    pub fn value(&self) -> Option<bool> {
        match self {
            Condition::Value(b) => Some(*b),
            Condition::Skipped(_) => None,
        }
    }

    fn skipped() -> Self {
        Condition::Skipped(SKIPPED.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharedEdge {
    pub edge: usize,
    pub cycles: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    pub circuit: String,
    pub a: usize,
    pub b: usize,
    pub rotation: usize,
    pub indices: [usize; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSummary {
    pub elements: usize,
    pub minimal: usize,
    pub join_semilattice: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub cycle_count: Option<usize>,
    pub cyclomatic_number: Option<usize>,
    pub shared_edge: Option<SharedEdge>,
    pub unique_partition: Option<Vec<Vec<usize>>>,
    pub partitions: Option<Vec<Vec<Vec<usize>>>>,
    pub s_decomposition: Option<Vec<Vec<usize>>>,
    pub non_cycle_block: Option<Vec<usize>>,
    pub arborescence_count: Option<String>,
    pub lattice: Option<LatticeSummary>,
    pub max_out_degree: Option<usize>,
    pub circuit_count: Option<String>,
    pub interlacing_pair: Option<PairWitness>,
    pub circuit_without_interlacing: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub schema: u32,
    pub kind: String,
    pub vertices: usize,
    pub edges: usize,
    pub loops: usize,
    pub eulerian: bool,
    /// Why the conditions were not evaluated, for non-Eulerian input.
    pub reason: Option<String>,
    pub conditions: BTreeMap<String, Condition>,
    pub proposition: Option<BTreeMap<String, Condition>>,
    pub witness: Witness,
    pub theorem_agrees: bool,
    pub proposition_agrees: bool,
    pub agrees: bool,
}

impl ConditionReport {
    pub fn condition(&self, key: &str) -> Option<bool> {
        self.conditions.get(key).and_then(Condition::value)
    }

    pub fn proposition_condition(&self, key: &str) -> Option<bool> {
        self.proposition.as_ref()?.get(key).and_then(Condition::value)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

fn agree(map: &BTreeMap<String, Condition>) -> bool {
    let mut values = map.values().filter_map(Condition::value);
    match values.next() {
        Some(first) => values.all(|v| v == first),
        None => true,
    }
}

/// Turn a budget error into `None`; other errors pass through.
fn within_budget<T>(r: cactus_core::Result<T>) -> Result<Option<T>, ToolError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn ids(edges: &[EdgeId]) -> Vec<usize> {
    edges.iter().map(|e| e.0).collect()
}

fn partition_ids(p: &CyclePartition) -> Vec<Vec<usize>> {
    p.key().iter().map(|s| ids(s)).collect()
}

/// First edge lying on two of the given edge sets.
fn shared_edge(sets: &[Vec<EdgeId>], m: usize) -> Option<SharedEdge> {
    let mut owner: Vec<Option<usize>> = vec![None; m];
    for (i, s) in sets.iter().enumerate() {
        for e in s {
            if let Some(j) = owner[e.0] {
                return Some(SharedEdge {
                    edge: e.0,
                    cycles: vec![ids(&sets[j]), ids(s)],
                });
            }
            owner[e.0] = Some(i);
        }
    }
    None
}

fn each_edge_once(sets: &[Vec<EdgeId>], m: usize) -> bool {
    let mut hits = vec![0usize; m];
    for s in sets {
        for e in s {
            hits[e.0] += 1;
        }
    }
    hits.iter().all(|&h| h == 1)
}

/// Whether the edge sets cover every edge with no overlaps, checked as a
/// partition of the edge set.
fn is_partition(sets: &[Vec<EdgeId>], m: usize) -> bool {
    let total: usize = sets.iter().map(Vec::len).sum();
    total == m && shared_edge(sets, m).is_none()
}

fn record_partitions(u: PartitionUniqueness, w: &mut Witness) -> bool {
    match u {
        PartitionUniqueness::Unique(p) => {
            w.unique_partition = Some(partition_ids(&p));
            true
        }
        PartitionUniqueness::Multiple(a, b) => {
            w.partitions = Some(vec![partition_ids(&a), partition_ids(&b)]);
            false
        }
        PartitionUniqueness::None => false,
    }
}

fn record_s_decomposition<G: Graph + ?Sized>(g: &G, w: &mut Witness) -> bool {
    match s_decompose(g) {
        Ok(dec) => {
            w.s_decomposition = Some(dec.cycles.iter().map(|c| ids(c.edges())).collect());
            true
        }
        Err(SFailure::NonCycleBlock(b)) => {
            w.non_cycle_block = Some(ids(&b.edges));
            false
        }
        Err(_) => false,
    }
}

fn loop_count(g: &ParsedGraph) -> usize {
    match g {
        ParsedGraph::Digraph(d) => d.loop_counts().iter().sum(),
        ParsedGraph::Multigraph(_) => 0,
    }
}

/// Evaluate every condition on `g` within `budgets`.
pub fn analyze(g: &ParsedGraph, budgets: &Budgets) -> Result<ConditionReport, ToolError> {
    let eulerian = match g {
        ParsedGraph::Digraph(d) => check_eulerian(d),
        ParsedGraph::Multigraph(x) => check_eulerian(x),
    };
    let mut witness = Witness::default();
    let (conditions, proposition, reason) = match eulerian {
        Err(e) => (BTreeMap::new(), None, Some(e.to_string())),
        Ok(()) => match g {
            ParsedGraph::Digraph(d) => {
                let c = theorem_conditions(d, budgets, &mut witness)?;
                let p = proposition_conditions(d, budgets, &mut witness)?;
                (c, Some(p), None)
            }
            ParsedGraph::Multigraph(x) => (multigraph_conditions(x, budgets, &mut witness)?, None, None),
        },
    };
    let theorem_agrees = agree(&conditions);
    let proposition_agrees = proposition.as_ref().is_none_or(agree);
    Ok(ConditionReport {
        schema: SCHEMA_VERSION,
        kind: g.kind().to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        loops: loop_count(g),
        eulerian: reason.is_none(),
        reason,
        conditions,
        proposition,
        witness,
        theorem_agrees,
        proposition_agrees,
        agrees: theorem_agrees && proposition_agrees,
    })
}

fn put(map: &mut BTreeMap<String, Condition>, key: &str, value: Option<bool>) {
    let c = value.map_or_else(Condition::skipped, Condition::Value);
    map.insert(key.to_string(), c);
}

fn theorem_conditions(
    g: &Digraph,
    budgets: &Budgets,
    w: &mut Witness,
) -> Result<BTreeMap<String, Condition>, ToolError> {
    let m = g.edge_count();
    let mut out = BTreeMap::new();
    let cycles = within_budget(directed_cycles(g, budgets.max_cycles))?;
    let sets: Option<Vec<Vec<EdgeId>>> = cycles.as_ref().map(|cs| cs.iter().map(|c| c.edge_set()).collect());
    let cyclomatic = cyclomatic_number(g)?;
    w.cyclomatic_number = Some(cyclomatic);
    w.cycle_count = cycles.as_ref().map(Vec::len);

    // (1) no two cycles share an edge
    let c1 = sets.as_ref().map(|s| {
        w.shared_edge = shared_edge(s, m);
        w.shared_edge.is_none()
    });
    put(&mut out, "c1", c1);
    // (2) every edge lies on exactly one cycle
    put(&mut out, "c2", sets.as_ref().map(|s| each_edge_once(s, m)));
    // (3) the set of all cycles is a partition
    put(
        &mut out,
        "c3",
        cycles.as_ref().map(|cs| CyclePartition::new(cs.clone()).is_partition_of(g)),
    );
    // (4) exactly one partition into cycles
    put(&mut out, "c4", Some(record_partitions(has_unique_partition(g)?, w)));
    // (5) built from cycles glued at single vertices
    put(&mut out, "c5", Some(record_s_decomposition(g, w)));
    // (6) as many cycles as the cyclomatic number
    put(&mut out, "c6", cycles.as_ref().map(|cs| cs.len() == cyclomatic));
    // (7) a single arborescence
    let tau = count_arborescences(g, VertexId(0))?.count;
    w.arborescence_count = Some(tau.to_string());
    put(&mut out, "c7", Some(tau == num_bigint::BigUint::from(1u32)));
    // (8) T(D) is a lattice
    let lattice = within_budget(check_condition_8(g, budgets.max_lattice_edges, budgets.max_partitions))?;
    w.lattice = lattice.as_ref().map(|l| LatticeSummary {
        elements: l.element_count,
        minimal: l.minimal_count,
        join_semilattice: l.is_join_semilattice,
    });
    put(&mut out, "c8", lattice.map(|l| l.is_lattice));
    Ok(out)
}

fn circuit_string(g: &Digraph, edges: &[EdgeId]) -> Result<(String, cactus_core::Circuit), ToolError> {
    let walk = Walk::from_edges(g, g.tail(edges[0]), edges)?;
    let circuit = canonicalize(&ClosedTrail::new(walk)?);
    Ok((circuit.to_string(), circuit))
}

fn proposition_conditions(
    g: &Digraph,
    budgets: &Budgets,
    w: &mut Witness,
) -> Result<BTreeMap<String, Condition>, ToolError> {
    let mut out = BTreeMap::new();
    let max_out = g.degrees().max_out();
    w.max_out_degree = Some(max_out);

    // (1) in S with out-degrees at most 2
    put(&mut out, "p1", Some(s_decompose(g).is_ok() && max_out <= 2));
    // (2) Christmas cactus
    put(&mut out, "p2", Some(is_christmas_cactus(g)));
    // (3) the cycle intersection graph is a tree
    let cycles = within_budget(directed_cycles(g, budgets.max_cycles))?;
    put(&mut out, "p3", cycles.map(|cs| IntersectionGraph::new(cs).is_tree()));
    // (4) one Eulerian circuit, by the B.E.S.T. count and by enumeration
    let count = best_count(g)?;
    w.circuit_count = Some(count.to_string());
    put(&mut out, "p4", Some(count == num_bigint::BigUint::from(1u32)));
    put(&mut out, "p4_enum", Some(count_eulerian_circuits_upto(g, 1)? == Some(1)));
    // (5) some Eulerian circuit has no interlacing pair
    let mut seen = 0usize;
    let mut first_pair: Option<PairWitness> = None;
    let mut free: Option<String> = None;
    let mut failure: Option<ToolError> = None;
    let flow = for_each_trail_ending_at(g, EdgeId(0), |trail| {
        seen += 1;
        if seen > budgets.max_circuits {
            return ControlFlow::Break(());
        }
        let (text, circuit) = match circuit_string(g, trail) {
            Ok(c) => c,
            Err(e) => {
                failure = Some(e);
                return ControlFlow::Break(());
            }
        };
        match find_interlacing_pair(&circuit) {
            None => {
                free = Some(text);
                ControlFlow::Break(())
            }
            Some(p) => {
                if first_pair.is_none() {
                    first_pair = Some(PairWitness {
                        circuit: text,
                        a: p.a.0,
                        b: p.b.0,
                        rotation: p.rotation,
                        indices: p.indices,
                    });
                }
                ControlFlow::Continue(())
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    let p5 = if free.is_some() {
        Some(true)
    } else if flow.is_break() {
        None
    } else {
        Some(false)
    };
    w.circuit_without_interlacing = free;
    w.interlacing_pair = first_pair;
    put(&mut out, "p5", p5);
    Ok(out)
}

fn multigraph_conditions(
    x: &Multigraph,
    budgets: &Budgets,
    w: &mut Witness,
) -> Result<BTreeMap<String, Condition>, ToolError> {
    let m = x.edge_count();
    let mut out = BTreeMap::new();
    let cycles = within_budget(undirected_cycles(x, budgets.max_cycles))?;
    let sets: Option<Vec<Vec<EdgeId>>> = cycles.map(|cs| cs.into_iter().map(|c| c.edges).collect());
    let cyclomatic = cyclomatic_number(x)?;
    w.cyclomatic_number = Some(cyclomatic);
    w.cycle_count = sets.as_ref().map(Vec::len);

    let c1 = sets.as_ref().map(|s| {
        w.shared_edge = shared_edge(s, m);
        w.shared_edge.is_none()
    });
    put(&mut out, "c1", c1);
    put(&mut out, "c2", sets.as_ref().map(|s| each_edge_once(s, m)));
    put(&mut out, "c3", sets.as_ref().map(|s| is_partition(s, m)));
    put(&mut out, "c4", Some(record_partitions(has_unique_partition(x)?, w)));
    put(&mut out, "c5", Some(record_s_decomposition(x, w)));
    put(&mut out, "c6", sets.as_ref().map(|s| s.len() == cyclomatic));
    Ok(out)
}
