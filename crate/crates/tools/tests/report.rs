use cactus_core::{fixtures, Digraph, Multigraph};
use cactus_tools::report::{Condition, SKIPPED};
use cactus_tools::{analyze, Budgets, ConditionReport, ParsedGraph};

const THEOREM: [&str; 8] = ["c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8"];
const PROPOSITION: [&str; 6] = ["p1", "p2", "p3", "p4", "p4_enum", "p5"];

fn report(g: Digraph) -> ConditionReport {
    analyze(&ParsedGraph::Digraph(g), &Budgets::default()).unwrap()
}

fn all(r: &ConditionReport, keys: &[&str], proposition: bool, value: bool) -> bool {
    keys.iter().all(|k| {
        let v = if proposition { r.proposition_condition(k) } else { r.condition(k) };
        v == Some(value)
    })
}

#[test]
fn fig8_satisfies_everything() {
    let r = report(fixtures::fig8());
    assert!(all(&r, &THEOREM, false, true));
    assert!(all(&r, &PROPOSITION, true, true));
    assert!(r.agrees);
    assert_eq!(r.witness.unique_partition, Some(vec![vec![0, 1, 2], vec![3, 4, 5]]));
    assert!(r.witness.circuit_without_interlacing.is_some());
}

#[test]
fn d4_fails_everything_with_witnesses() {
    let r = report(fixtures::d4());
    assert!(all(&r, &THEOREM, false, false));
    assert!(all(&r, &PROPOSITION, true, false));
    assert!(r.agrees);
    let w = &r.witness;
    assert_eq!(w.partitions.as_ref().map(Vec::len), Some(2));
    assert!(w.shared_edge.is_some());
    assert_eq!(w.non_cycle_block, Some(vec![0, 1, 2, 3]));
    assert!(w.interlacing_pair.is_some());
    assert_eq!(w.arborescence_count.as_deref(), Some("2"));
}

#[test]
fn star3_is_a_cactus_without_a_unique_circuit() {
    let r = report(fixtures::star3());
    assert!(all(&r, &THEOREM, false, true));
    assert!(all(&r, &PROPOSITION, true, false));
    assert!(r.agrees);
    assert_eq!(r.witness.max_out_degree, Some(3));
}

#[test]
fn loops_are_reported() {
    let r = report(fixtures::de_bruijn(2));
    assert_eq!(r.loops, 2);
    assert!(all(&r, &THEOREM, false, false));
    assert_eq!(r.witness.circuit_count.as_deref(), Some("2"));
    assert!(r.agrees);
}

#[test]
fn non_eulerian_input_says_why() {
    let path = Digraph::new(2, [(0, 1)]).unwrap();
    let r = report(path);
    assert!(!r.eulerian);
    assert!(r.reason.as_deref().unwrap().contains("unbalanced"));
    assert!(r.conditions.is_empty());
    assert!(r.agrees);
}

#[test]
fn budgets_degrade_to_skipped() {
    let budgets = Budgets {
        max_cycles: 1,
        max_lattice_edges: 2,
        ..Budgets::default()
    };
    let r = analyze(&ParsedGraph::Digraph(fixtures::star3()), &budgets).unwrap();
    for key in ["c1", "c2", "c3", "c6", "c8"] {
        assert_eq!(r.conditions[key], Condition::Skipped(SKIPPED.into()), "{key}");
    }
    assert_eq!(r.condition("c4"), Some(true));
    assert!(r.agrees);
    let json = r.to_json();
    assert!(json.contains("\"c1\": \"skipped: budget\""));
}

#[test]
fn multigraph_conditions() {
    let two_triangles = Multigraph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
    let r = analyze(&ParsedGraph::Multigraph(two_triangles), &Budgets::default()).unwrap();
    assert_eq!(r.conditions.len(), 6);
    assert!(r.conditions.values().all(|c| c.value() == Some(true)));
    assert!(r.proposition.is_none());

    let k4_doubled = Multigraph::new(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]).unwrap();
    let r = analyze(&ParsedGraph::Multigraph(k4_doubled), &Budgets::default()).unwrap();
    assert!(r.conditions.values().all(|c| c.value() == Some(false)));
    assert!(r.agrees);
}

#[test]
fn json_is_deterministic_and_versioned() {
    for name in fixtures::NAMES {
        let a = report(fixtures::by_name(name).unwrap()).to_json();
        let b = report(fixtures::by_name(name).unwrap()).to_json();
        assert_eq!(a, b, "{name}");
        let parsed: ConditionReport = serde_json::from_str(&a).unwrap();
        assert_eq!(parsed.schema, 1);
        assert_eq!(parsed.to_json(), a);
    }
}

#[test]
fn budget_validation() {
    assert!(Budgets::default().validate().is_ok());
    let zero = Budgets {
        max_circuits: 0,
        ..Budgets::default()
    };
    assert_eq!(zero.validate().unwrap_err().exit_code(), 3);
    let huge = Budgets {
        max_lattice_edges: 40,
        ..Budgets::default()
    };
    assert_eq!(huge.validate().unwrap_err().exit_code(), 3);
}
