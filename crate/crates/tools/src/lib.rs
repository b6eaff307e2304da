//! File formats, condition reports and batch runs on top of `cactus-core`.

pub mod batch;
pub mod corpus;
pub mod dot;
pub mod error;
pub mod format;
pub mod report;

pub use error::ToolError;
pub use format::{emit_graph, parse_graph, ParsedGraph};
pub use report::{analyze, Budgets, ConditionReport};
