//! Batch verification over a directory of graph files or a generated corpus.

use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{instances, Family};
use crate::error::ToolError;
use crate::format::{parse_graph, ParsedGraph};
use crate::report::{analyze, Budgets, Condition, ConditionReport};

#[derive(Debug, Clone)]
pub struct BatchItem {
    pub name: String,
    pub family: String,
    pub graph: ParsedGraph,
}

#[derive(Debug, Clone, Serialize)]
pub struct BatchEntry {
    pub name: String,
    pub family: String,
    pub report: ConditionReport,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FamilySummary {
    pub instances: usize,
    pub non_eulerian: usize,
    /// Instances whose evaluated theorem conditions all hold.
    pub theorem_true: usize,
    /// Instances whose evaluated theorem conditions all fail.
    pub theorem_false: usize,
    pub unique_circuit: usize,
    pub skipped_conditions: usize,
    pub disagreements: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct BatchSummary {
    pub families: BTreeMap<String, FamilySummary>,
    pub disagreements: Vec<String>,
    pub entries: Vec<BatchEntry>,
}

impl BatchSummary {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Every `*.graph` and `*.txt` file in `dir`, sorted by file name. Files
/// are parsed with loops enabled; the family is the file stem up to the
/// first `-` or `_`.
pub fn load_dir(dir: &Path) -> Result<Vec<BatchItem>, ToolError> {
    let io = |source| ToolError::Io {
        path: dir.display().to_string(),
        source,
    };
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .map(|entry| entry.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(io)?;
    paths.retain(|p| matches!(p.extension().and_then(|e| e.to_str()), Some("graph" | "txt")));
    paths.sort();
    paths
        .into_iter()
        .map(|path| {
            let shown = path.display().to_string();
            let text = std::fs::read_to_string(&path).map_err(|source| ToolError::Io {
                path: shown.clone(),
                source,
            })?;
            let graph = parse_graph(&text, true).map_err(|source| ToolError::Parse {
                path: shown.clone(),
                source,
            })?;
            let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default();
            let family = stem.split(['-', '_']).next().unwrap_or(stem).to_string();
            Ok(BatchItem {
                name: stem.to_string(),
                family,
                graph,
            })
        })
        .collect()
}

/// `count` instances of each family, each with at most `max_edges` edges.
pub fn generate(families: &[Family], count: usize, seed: u64, max_edges: usize) -> Result<Vec<BatchItem>, ToolError> {
    let mut out = Vec::new();
    for &family in families {
        for inst in instances(family, count, seed, max_edges)? {
            out.push(BatchItem {
                name: inst.name,
                family: family.name().to_string(),
                graph: ParsedGraph::Digraph(inst.graph),
            });
        }
    }
    Ok(out)
}

fn all_equal(report: &ConditionReport, value: bool) -> bool {
    report.eulerian && report.conditions.values().filter_map(Condition::value).all(|v| v == value)
}

/// Analyze every item in parallel. Entries keep the input order.
pub fn run(items: Vec<BatchItem>, budgets: &Budgets) -> Result<BatchSummary, ToolError> {
    let entries = items
        .into_par_iter()
        .map(|item| {
            analyze(&item.graph, budgets).map(|report| BatchEntry {
                name: item.name,
                family: item.family,
                report,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut families: BTreeMap<String, FamilySummary> = BTreeMap::new();
    let mut disagreements = Vec::new();
    for entry in &entries {
        let r = &entry.report;
        let s = families.entry(entry.family.clone()).or_default();
        s.instances += 1;
        s.non_eulerian += usize::from(!r.eulerian);
        s.theorem_true += usize::from(all_equal(r, true));
        s.theorem_false += usize::from(all_equal(r, false));
        s.unique_circuit += usize::from(r.proposition_condition("p4") == Some(true));
        s.skipped_conditions += r
            .conditions
            .values()
            .chain(r.proposition.iter().flat_map(|p| p.values()))
            .filter(|c| matches!(c, Condition::Skipped(_)))
            .count();
        if !r.agrees {
            s.disagreements += 1;
            disagreements.push(entry.name.clone());
        }
    }
    Ok(BatchSummary {
        families,
        disagreements,
        entries,
    })
}
