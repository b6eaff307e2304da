//! The text edge-list format.
//!
//! ```text
//! digraph
//! 3 3
//! 0 1
//! 1 2
//! 2 0
//! ```
//!
//! Line 1 is `digraph` or `multigraph`, line 2 is `<n> <m>`, then one
//! `<tail> <head>` (or `<u> <v>`) line per edge. Lines starting with `#` and
//! blank lines are ignored. A loop `u u` is only accepted in a digraph, and
//! only when loops are enabled.

use std::fmt::Write as _;

use cactus_core::{Digraph, Graph, Multigraph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGraph {
    Digraph(Digraph),
    Multigraph(Multigraph),
}

impl ParsedGraph {
    pub fn kind(&self) -> &'static str {
        match self {
            ParsedGraph::Digraph(_) => "digraph",
            ParsedGraph::Multigraph(_) => "multigraph",
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            ParsedGraph::Digraph(g) => g.vertex_count(),
            ParsedGraph::Multigraph(x) => x.vertex_count(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            ParsedGraph::Digraph(g) => g.edge_count(),
            ParsedGraph::Multigraph(x) => x.edge_count(),
        }
    }

    pub fn as_digraph(&self) -> Option<&Digraph> {
        match self {
            ParsedGraph::Digraph(g) => Some(g),
            ParsedGraph::Multigraph(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Eof(String),
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        message: message.into(),
    }
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(at(line, format!("expected two integers, found {:?}", text.trim())));
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| at(line, format!("{s:?} is not a non-negative integer")))
    };
    Ok((num(fields[0])?, num(fields[1])?))
}

/// Parse the text format. `allow_loops` enables `u u` lines in digraphs.
pub fn parse_graph(text: &str, allow_loops: bool) -> Result<ParsedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (kind_line, kind) = lines.next().ok_or_else(|| ParseError::Eof("missing graph kind".into()))?;
    let directed = match kind.trim() {
        "digraph" => true,
        "multigraph" => false,
        other => return Err(at(kind_line, format!("expected `digraph` or `multigraph`, found {other:?}"))),
    };
    let (size_line, size) = lines
        .next()
        .ok_or_else(|| ParseError::Eof("missing `<n> <m>` line".into()))?;
    let (n, m) = two_numbers(size_line, size)?;
    if n == 0 {
        return Err(at(size_line, "a graph needs at least one vertex"));
    }

    let mut edges = Vec::with_capacity(m);
    for k in 0..m {
        let (line, text) = lines
            .next()
            .ok_or_else(|| ParseError::Eof(format!("expected {m} edges, found {k}")))?;
        let (a, b) = two_numbers(line, text)?;
        for v in [a, b] {
            if v >= n {
                return Err(at(line, format!("vertex {v} is out of range 0..{n}")));
            }
        }
        if a == b {
            if !directed {
                return Err(at(line, format!("loop at {a}: multigraphs are loopless")));
            }
            if !allow_loops {
                return Err(at(line, format!("loop at {a}: loops need --loops")));
            }
        }
        edges.push((a, b));
    }
    if let Some((line, _)) = lines.next() {
        return Err(at(line, format!("more than the declared {m} edges")));
    }

    let built = if directed {
        if allow_loops {
            Digraph::with_loops(n, edges).map(ParsedGraph::Digraph)
        } else {
            Digraph::new(n, edges).map(ParsedGraph::Digraph)
        }
    } else {
        Multigraph::new(n, edges).map(ParsedGraph::Multigraph)
    };
    built.map_err(|e| at(size_line, e.to_string()))
}

pub fn emit_digraph(g: &Digraph) -> String {
    let mut out = format!("digraph\n{} {}\n", g.vertex_count(), g.edge_count());
    for (t, h) in g.edges() {
        let _ = writeln!(out, "{t} {h}");
    }
    out
}

pub fn emit_multigraph(x: &Multigraph) -> String {
    let mut out = format!("multigraph\n{} {}\n", x.vertex_count(), x.edge_count());
    for (a, b) in x.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

pub fn emit_graph(g: &ParsedGraph) -> String {
    match g {
        ParsedGraph::Digraph(d) => emit_digraph(d),
        ParsedGraph::Multigraph(x) => emit_multigraph(x),
    }
}
