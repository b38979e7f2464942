use thiserror::Error;

/// Errors raised by the library. Every operation is total on valid input, so
/// these only report malformed arguments or unsupported combinations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{dim} is not divisible by {degree}")]
    Divisibility { dim: String, degree: u64 },

    #[error("unsupported rank: {0}")]
    UnsupportedRank(String),

    #[error("unsupported decomposition: {0}")]
    UnsupportedDecomposition(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
