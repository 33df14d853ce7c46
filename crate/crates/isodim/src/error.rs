use thiserror::Error;

use crate::field::FieldSpec;

/// Unified error type for the crate.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("mismatched fields: {0} and {1}")]
    MismatchedField(FieldSpec, FieldSpec),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vector does not lie in the space")]
    NotMember,
    #[error("not a subspace of the ambient space")]
    NotSubspace,
    #[error("map is not injective")]
    NotInjective,
    #[error("vectors do not span the space")]
    NotSurjective,
    #[error("vector already lies in the image")]
    AlreadyInImage,
    #[error("map is not an isomorphism")]
    NotInvertible,
    #[error("enumeration needs {needed} points, budget allows {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("enumeration is only available over prime fields")]
    PrimeFieldRequired,
}

impl Error {
    /// True for errors caused by malformed textual input rather than by a
    /// domain condition.  The CLI maps these to a distinct exit code.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
