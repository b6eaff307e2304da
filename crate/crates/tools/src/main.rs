use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use cactus_core::euler::{
    best_count, de_bruijn_interlace, enumerate_eulerian_circuits, find_eulerian_circuit,
    find_interlacing_pair, DEFAULT_MAX_DE_BRUIJN_INTERLACE,
};
use cactus_core::generators::{
    gen_cactus, gen_christmas_cactus, gen_de_bruijn, gen_random_eulerian, gen_two_in_two_out, DEFAULT_MAX_DE_BRUIJN,
};
use cactus_core::lattice::eulerian_partition_poset;
use cactus_core::partition::enumerate_partitions;
use cactus_core::{fixtures, Digraph, EdgeId};
use cactus_tools::batch;
use cactus_tools::corpus::Family;
use cactus_tools::dot::to_dot;
use cactus_tools::format::{emit_digraph, parse_graph, ParsedGraph};
use cactus_tools::{analyze, Budgets, ToolError};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

#[derive(Parser)]
#[command(name = "cactus", version, about = "Bridgeless and Christmas cactus recognition for Eulerian graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file in the edge-list format, or `-` for stdin.
    #[arg(conflicts_with = "fixture")]
    path: Option<String>,
    /// Use a built-in fixture: C3, D4, FIG8, STAR3, CHAIN3 or D2.
    #[arg(long)]
    fixture: Option<String>,
    /// Accept loops `u u` in digraph input.
    #[arg(long)]
    loops: bool,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = Budgets::default().max_cycles)]
    max_cycles: usize,
    #[arg(long, default_value_t = Budgets::default().max_partitions)]
    max_partitions: usize,
    #[arg(long, default_value_t = Budgets::default().max_circuits)]
    max_circuits: usize,
    #[arg(long, default_value_t = Budgets::default().max_lattice_edges)]
    max_lattice_edges: usize,
}

impl BudgetArgs {
    fn budgets(&self) -> Result<Budgets, ToolError> {
        let b = Budgets {
            max_cycles: self.max_cycles,
            max_partitions: self.max_partitions,
            max_circuits: self.max_circuits,
            max_lattice_edges: self.max_lattice_edges,
        };
        b.validate()?;
        Ok(b)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and print it in the edge-list format.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Evaluate every characterizing condition and print a JSON report.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// List the partitions of the edge set into cycles as JSON.
    Partitions {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = Budgets::default().max_partitions)]
        max_partitions: usize,
    },
    /// Eulerian circuits: one circuit, the count, all circuits, or interlacing pairs.
    Euler {
        #[command(flatten)]
        input: Input,
        /// Print only the B.E.S.T. count.
        #[arg(long, conflicts_with_all = ["enumerate", "interlace", "debruijn"])]
        count_only: bool,
        /// Print every Eulerian circuit, one per line.
        #[arg(long, conflicts_with_all = ["interlace", "debruijn"])]
        enumerate: bool,
        #[arg(long, default_value_t = Budgets::default().max_circuits, requires = "enumerate")]
        cap: usize,
        /// Print a circuit together with an interlacing pair, if it has one.
        #[arg(long, conflicts_with = "debruijn")]
        interlace: bool,
        /// Count the De Bruijn digraph of order n and find an interlacing pair.
        #[arg(long, value_name = "N")]
        debruijn: Option<usize>,
    },
    /// The poset of Eulerian edge partitions as JSON.
    Lattice {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = Budgets::default().max_lattice_edges)]
        max_lattice_edges: usize,
        #[arg(long, default_value_t = Budgets::default().max_partitions)]
        max_partitions: usize,
    },
    /// Analyze a directory of graph files or a generated corpus.
    Batch {
        /// Directory of `*.graph` or `*.txt` files.
        #[arg(long, conflicts_with_all = ["family", "count", "seed", "max_edges"])]
        dir: Option<PathBuf>,
        /// Generator family; repeat for several. Defaults to all families.
        #[arg(long, value_parser = parse_family)]
        family: Vec<Family>,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        max_edges: usize,
        /// Print every report as JSON instead of the per-family summary.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Print the graph in Graphviz DOT.
    Dot {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Union of k random directed cycles on n vertices.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Bridgeless cactus with t cycles.
    Cactus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Christmas cactus with t cycles.
    Christmas {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        t: usize,
    },
    /// Binary De Bruijn digraph of order n (has loops).
    DeBruijn {
        #[arg(long)]
        n: usize,
    },
    /// Random 2-in 2-out digraph on n vertices.
    TwoInTwoOut {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: usize,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| {
        let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("unknown family {s:?}; expected one of {}", names.join(", "))
    })
}

fn read_input(input: &Input) -> Result<ParsedGraph, ToolError> {
    if let Some(name) = &input.fixture {
        return fixtures::by_name(name)
            .map(ParsedGraph::Digraph)
            .ok_or_else(|| ToolError::Input(format!("unknown fixture {name:?}")));
    }
    let path = input
        .path
        .as_deref()
        .ok_or_else(|| ToolError::Input("give a graph file, `-` for stdin, or --fixture".into()))?;
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| ToolError::Io {
                path: "<stdin>".into(),
                source,
            })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|source| ToolError::Io {
            path: path.into(),
            source,
        })?
    };
    parse_graph(&text, input.loops).map_err(|source| ToolError::Parse {
        path: path.into(),
        source,
    })
}

fn read_digraph(input: &Input, what: &str) -> Result<Digraph, ToolError> {
    match read_input(input)? {
        ParsedGraph::Digraph(g) => Ok(g),
        ParsedGraph::Multigraph(_) => Err(ToolError::Input(format!("{what} needs a digraph"))),
    }
}

fn ids(edges: &[EdgeId]) -> Vec<usize> {
    edges.iter().map(|e| e.0).collect()
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json values serialize")
}

fn run(cli: Cli) -> Result<ExitCode, ToolError> {
    match cli.command {
        Command::Gen { family } => {
            let g = match family {
                GenFamily::Random { seed, n, k } => gen_random_eulerian(seed, n, k)?,
                GenFamily::Cactus { seed, t, max_len } => gen_cactus(seed, t, max_len)?,
                GenFamily::Christmas { seed, t } => gen_christmas_cactus(seed, t)?,
                GenFamily::DeBruijn { n } => gen_de_bruijn(n, DEFAULT_MAX_DE_BRUIJN)?,
                GenFamily::TwoInTwoOut { seed, n } => gen_two_in_two_out(seed, n)?,
            };
            print!("{}", emit_digraph(&g));
        }
        Command::Analyze { input, budgets } => {
            let budgets = budgets.budgets()?;
            let report = analyze(&read_input(&input)?, &budgets)?;
            println!("{}", report.to_json());
            if !report.agrees {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Partitions { input, max_partitions } => {
            if max_partitions == 0 {
                return Err(ToolError::Budget("--max-partitions must be at least 1".into()));
            }
            let partitions = match read_input(&input)? {
                ParsedGraph::Digraph(g) => enumerate_partitions(&g, max_partitions)?,
                ParsedGraph::Multigraph(x) => enumerate_partitions(&x, max_partitions)?,
            };
            let list: Vec<Vec<Vec<usize>>> = partitions
                .iter()
                .map(|p| p.key().iter().map(|c| ids(c)).collect())
                .collect();
            println!("{}", pretty(&json!({ "count": list.len(), "partitions": list })));
        }
        Command::Euler {
            input,
            count_only,
            enumerate,
            cap,
            interlace,
            debruijn,
        } => {
            if let Some(n) = debruijn {
                let d = de_bruijn_interlace(n, DEFAULT_MAX_DE_BRUIJN_INTERLACE)?;
                let out = json!({
                    "n": d.n,
                    "circuit_count": d.circuit_count.to_string(),
                    "sample": d.sample.to_string(),
                    "pair": { "a": d.pair.a.0, "b": d.pair.b.0 },
                });
                println!("{}", pretty(&out));
                return Ok(ExitCode::SUCCESS);
            }
            let g = read_digraph(&input, "euler")?;
            if count_only {
                println!("{}", best_count(&g)?);
            } else if enumerate {
                if cap == 0 {
                    return Err(ToolError::Budget("--cap must be at least 1".into()));
                }
                for c in enumerate_eulerian_circuits(&g, cap)? {
                    println!("{c}");
                }
            } else if interlace {
                let circuit = find_eulerian_circuit(&g)?;
                let pair = find_interlacing_pair(circuit.circuit()).map(|p| {
                    json!({ "a": p.a.0, "b": p.b.0, "rotation": p.rotation, "indices": p.indices })
                });
                println!("{}", pretty(&json!({ "circuit": circuit.to_string(), "pair": pair })));
            } else {
                println!("{}", find_eulerian_circuit(&g)?);
            }
        }
        Command::Lattice {
            input,
            max_lattice_edges,
            max_partitions,
        } => {
            Budgets {
                max_lattice_edges,
                max_partitions,
                ..Budgets::default()
            }
            .validate()?;
            let poset = match read_input(&input)? {
                ParsedGraph::Digraph(g) => eulerian_partition_poset(&g, max_lattice_edges, max_partitions)?,
                ParsedGraph::Multigraph(x) => eulerian_partition_poset(&x, max_lattice_edges, max_partitions)?,
            };
            let elements: Vec<Vec<Vec<usize>>> = poset
                .elements
                .iter()
                .map(|p| p.parts.iter().map(|part| ids(part)).collect())
                .collect();
            let out = json!({
                "elements": elements,
                "covers": poset.covers(),
                "minimal": poset.minimal(),
                "is_join_semilattice": poset.is_join_semilattice(),
                "is_lattice": poset.is_lattice(),
            });
            println!("{}", pretty(&out));
        }
        Command::Batch {
            dir,
            family,
            count,
            seed,
            max_edges,
            json,
            budgets,
        } => {
            let budgets = budgets.budgets()?;
            let items = match dir {
                Some(dir) => batch::load_dir(&dir)?,
                None => {
                    let families = if family.is_empty() { Family::ALL.to_vec() } else { family };
                    batch::generate(&families, count, seed, max_edges)?
                }
            };
            let summary = batch::run(items, &budgets)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&summary).expect("summaries serialize"));
            } else {
                for (name, s) in &summary.families {
                    println!(
                        "{name}: {} instances, {} in S, {} not in S, {} non-Eulerian, {} unique circuit, {} skipped, {} disagreements",
                        s.instances,
                        s.theorem_true,
                        s.theorem_false,
                        s.non_eulerian,
                        s.unique_circuit,
                        s.skipped_conditions,
                        s.disagreements
                    );
                }
                for name in &summary.disagreements {
                    println!("disagreement: {name}");
                }
            }
            if !summary.agrees() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Dot { input } => print!("{}", to_dot(&read_input(&input)?)),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
