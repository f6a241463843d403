use thiserror::Error;

use crate::graph::io::ParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("expected {expected} entries, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not triangle-free")]
    NotTriangleFree,

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
