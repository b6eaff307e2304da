//! Recognition, counting and enumeration for Eulerian digraphs and
//! multigraphs whose edge set has a unique partition into cycles (bridgeless
//! cacti) or which admit a unique Eulerian circuit (Christmas cacti).
//!
//! Every characterizing condition is implemented on its own, without routing
//! through any of the others, so that agreement between them can be used as a
//! test oracle. The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod arborescence;
pub mod cactus;
pub mod cycle_enum;
mod determinant;
mod error;
pub mod euler;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod lattice;
pub mod partition;
pub mod set_partitions;
pub mod walks;

pub use error::{Error, Result};
pub use graph::{Digraph, EdgeId, Graph, Multigraph, VertexId};
pub use walks::{Circuit, ClosedTrail, Cycle, Walk};
