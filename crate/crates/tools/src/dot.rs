//! Graphviz export. Edges are labelled with their ids.

use std::fmt::Write as _;

use crate::format::ParsedGraph;

pub fn to_dot(g: &ParsedGraph) -> String {
    let (header, arrow, edges) = match g {
        ParsedGraph::Digraph(d) => ("digraph", "->", d.edges()),
        ParsedGraph::Multigraph(x) => ("graph", "--", x.edges()),
    };
    let mut out = format!("{header} G {{\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (i, (a, b)) in edges.iter().enumerate() {
        let _ = writeln!(out, "  {a} {arrow} {b} [label=\"e{i}\"];");
    }
    out.push_str("}\n");
    out
}
