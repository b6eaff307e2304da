//! Seeded instance families for batch runs and acceptance checks.

use cactus_core::generators::{gen_cactus, gen_christmas_cactus, gen_random_eulerian, gen_two_in_two_out};
use cactus_core::{Digraph, Graph};

use crate::error::ToolError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Random,
    Cactus,
    Christmas,
    TwoInTwoOut,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Random, Family::Cactus, Family::Christmas, Family::TwoInTwoOut];

    pub fn name(self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::Cactus => "cactus",
            Family::Christmas => "christmas",
            Family::TwoInTwoOut => "two-in-two-out",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    /// The `i`-th draw of the family. Sizes cycle through small ranges so
    /// that consecutive draws differ in shape as well as seed.
    pub fn draw(self, seed: u64, i: usize) -> Result<Digraph, ToolError> {
        let s = seed.wrapping_add(i as u64);
        let g = match self {
            Family::Random => gen_random_eulerian(s, 2 + i % 6, 1 + i / 6 % 4)?,
            Family::Cactus => gen_cactus(s, 1 + i % 5, 2 + i / 5 % 3)?,
            Family::Christmas => gen_christmas_cactus(s, 1 + i % 6)?,
            Family::TwoInTwoOut => gen_two_in_two_out(s, 2 + i % 7)?,
        };
        Ok(g)
    }
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub family: Family,
    pub graph: Digraph,
}

/// The first `count` draws of `family` with at most `max_edges` edges.
pub fn instances(family: Family, count: usize, seed: u64, max_edges: usize) -> Result<Vec<Instance>, ToolError> {
    let mut out = Vec::with_capacity(count);
    let mut i = 0;
    let mut misses = 0;
    while out.len() < count {
        let graph = family.draw(seed, i)?;
        if graph.edge_count() <= max_edges {
            out.push(Instance {
                name: format!("{}-{}", family.name(), i),
                family,
                graph,
            });
            misses = 0;
        } else {
            misses += 1;
            if misses > 10_000 {
                return Err(ToolError::Input(format!(
                    "family {} produces no instances with at most {max_edges} edges",
                    family.name()
                )));
            }
        }
        i += 1;
    }
    Ok(out)
}
