//! Error type shared by all exact-arithmetic operations.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd undefined: both inputs are zero")]
    GcdUndefined,

    #[error("polynomial must be monic: {0}")]
    NotMonic(String),

    #[error("polynomial has zero constant term: {0}")]
    ZeroConstantTerm(String),

    #[error("polynomial must have positive degree")]
    DegreeZero,

    #[error("coefficient index {index} is below truncation order {order}")]
    BelowTruncation { index: i64, order: i64 },

    #[error("series order {have} is insufficient: need at least {need}")]
    InsufficientOrder { have: i64, need: i64 },

    #[error("hat not polynomial (inconsistent bubble data or zero category): {0}")]
    NonPolynomialTail(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid scalar: {0}")]
    InvalidScalar(String),

    #[error("theory violation (this must never fire): {0}")]
    TheoryViolation(String),
}

pub type Result<T> = std::result::Result<T, MathError>;
