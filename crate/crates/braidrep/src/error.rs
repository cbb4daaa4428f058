//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("truncation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("nonzero constant term")]
    NonzeroConstantTerm,

    #[error("constant term is not 1")]
    ConstantTermNotOne,

    #[error("singular: {0}")]
    Singular(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("relation residual nonzero: {0}")]
    RelationViolation(String),

    #[error("degree {0} exceeds resource guard (max {1})")]
    DegreeTooLarge(usize, usize),

    #[error("linear system inconsistent while solving {0}; this indicates a bug")]
    Inconsistent(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
