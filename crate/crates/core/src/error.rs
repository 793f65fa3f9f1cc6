//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected a coefficient vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("invalid doubling context: {0}")]
    InvalidContext(String),

    #[error("gauge transformation requires a unitary element")]
    NonUnitary,
}
