use thiserror::Error;

/// Errors raised by the algebraic layers of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("cyclotomic order mismatch: {left} vs {right}")]
    FieldMismatch { left: u64, right: u64 },

    #[error("invalid pairing: {0}")]
    InvalidPairing(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
