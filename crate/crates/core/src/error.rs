use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// The input is well-formed but outside the hypotheses an operation needs.
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    /// The input violates structure that the defining relations force.
    #[error("invalid structure: {0}")]
    Structure(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
