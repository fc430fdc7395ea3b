use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("operation needs a commutative field, got {0}")]
    NotAField(String),
    #[error("semigroup closure exceeded cap of {0} elements")]
    CapExceeded(usize),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("no rank-one element found within budget; smallest nonzero rank seen {min_rank}")]
    RankOneNotFound { min_rank: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("semigroup is not irreducible")]
    NonIrreducibleSemigroup,
    #[error("internal consistency check failed: {0}")]
    TheoremViolation(String),
}

impl Error {
    /// True for outcomes caused by a search budget or an undecidable-here
    /// question rather than by bad input.
    pub fn is_inconclusive(&self) -> bool {
        matches!(
            self,
            Error::Inconclusive(_) | Error::RankOneNotFound { .. } | Error::CapExceeded(_)
        )
    }
}
