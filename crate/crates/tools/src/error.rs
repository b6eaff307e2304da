use thiserror::Error;

use crate::format::ParseError;

#[derive(Debug, Error)]
pub enum ToolError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: ParseError,
    },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("bad budget configuration: {0}")]
    Budget(String),
    #[error(transparent)]
    Graph(#[from] cactus_core::Error),
}

impl ToolError {
    /// Process exit code: 3 for a budget that is invalid or too small for the
    /// requested output, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            ToolError::Budget(_) | ToolError::Graph(cactus_core::Error::BudgetExceeded { .. }) => 3,
            _ => 2,
        }
    }
}
