use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} is out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge {edge} is out of range for a graph with {edge_count} edges")]
    EdgeOutOfRange { edge: usize, edge_count: usize },
    #[error("loop at vertex {0} in a loopless graph")]
    LoopNotAllowed(VertexId),
    #[error("edge {0} is a loop")]
    LoopEdge(EdgeId),
    #[error("vertices must be distinct")]
    SameVertex,
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex {0} is unbalanced (in-degree differs from out-degree, or odd degree)")]
    Unbalanced(VertexId),
    #[error("graph is disconnected: vertex {0} is not reachable from vertex 0")]
    Disconnected(VertexId),
    #[error("malformed walk at position {index}")]
    MalformedWalk { index: usize },
    #[error("not a closed trail")]
    NotClosedTrail,
    #[error("graph is not a bridgeless cactus")]
    NotCactus,
    #[error("{what} budget of {cap} exceeded")]
    BudgetExceeded { what: &'static str, cap: usize },
    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("generation failed after {attempts} attempts")]
    GenerationFailed { attempts: usize },
}

impl Error {
    pub(crate) fn budget(what: &'static str, cap: usize) -> Self {
        Error::BudgetExceeded { what, cap }
    }
}
