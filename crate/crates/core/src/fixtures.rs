//! Small named graphs used throughout the tests and by the CLI.
//!
//! | name   | shape                                              |
//! |--------|----------------------------------------------------|
//! | C3     | directed triangle `0 -> 1 -> 2 -> 0`               |
//! | D4     | `u = 0`, `v = 1`; edges `a1 a2: u -> v`, `b1 b2: v -> u` (ids 0..3) |
//! | FIG8   | triangles `0 1 2` and `2 3 4` sharing vertex 2     |
//! | STAR3  | three digons on a center 0 with leaves 1, 2, 3     |
//! | CHAIN3 | digons `0-1`, `1-2`, `2-3` in a path               |

use crate::generators;
use crate::graph::Digraph;

pub fn c3() -> Digraph {
    Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).expect("valid fixture")
}

pub fn d4() -> Digraph {
    Digraph::new(2, [(0, 1), (0, 1), (1, 0), (1, 0)]).expect("valid fixture")
}

pub fn fig8() -> Digraph {
    Digraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).expect("valid fixture")
}

pub fn star3() -> Digraph {
    Digraph::new(4, [(0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0)]).expect("valid fixture")
}

pub fn chain3() -> Digraph {
    Digraph::new(4, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2)]).expect("valid fixture")
}

/// De Bruijn digraph on binary strings of length `n` (loop-allowed).
pub fn de_bruijn(n: usize) -> Digraph {
    generators::gen_de_bruijn(n, generators::DEFAULT_MAX_DE_BRUIJN).expect("order in range")
}

/// Look a fixture up by name, case-insensitively. `D1`, `D2`, `D3` and
/// `debruijn<n>` name De Bruijn digraphs (`D4` is the double digon).
pub fn by_name(name: &str) -> Option<Digraph> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "c3" => Some(c3()),
        "d4" => Some(d4()),
        "fig8" => Some(fig8()),
        "star3" => Some(star3()),
        "chain3" => Some(chain3()),
        "d1" => Some(de_bruijn(1)),
        "d2" => Some(de_bruijn(2)),
        "d3" => Some(de_bruijn(3)),
        _ => {
            let n: usize = lower.strip_prefix("debruijn")?.parse().ok()?;
            generators::gen_de_bruijn(n, generators::DEFAULT_MAX_DE_BRUIJN).ok()
        }
    }
}

pub const NAMES: [&str; 6] = ["C3", "D4", "FIG8", "STAR3", "CHAIN3", "D2"];
