use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value out of range: {0}")]
    Range(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("shape mismatch: expected {expected} variables, found {found}")]
    Shape { expected: usize, found: usize },

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("empty polynomial has no leading term")]
    EmptyPolynomial,

    #[error("pole: coordinate {index} is zero but carries a negative exponent")]
    Pole { index: usize },

    /// A group element broke an identity that should hold for every element.
    #[error("invariant violated by {witness}: {detail}")]
    InvariantViolation { witness: String, detail: String },

    /// Decomposition met a leading monomial that cannot lead an invariant.
    #[error("input is not invariant: offending monomial {monomial:?}")]
    NotInvariant { monomial: Vec<i64> },

    #[error("reduction did not terminate within {0} steps")]
    NonTermination(usize),

    #[error("theory violation: {0}")]
    TheoryViolation(String),

    #[error("no power k <= {kmax} clears the denominators; most negative residual exponent {residual}")]
    ClearingFailure { kmax: u32, residual: i64 },

    #[error("internal certification failure: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn shape(expected: usize, found: usize) -> Self {
        Error::Shape { expected, found }
    }
}
