use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A division that the theory guarantees to be exact left a remainder.
    #[error("integrality violation in {context}: {numerator} is not divisible by {divisor}")]
    IntegralityViolation {
        context: String,
        numerator: BigInt,
        divisor: BigInt,
    },

    #[error("series division is not exact at degree {degree}")]
    InexactSeriesDivision { degree: usize },

    #[error("group has free rank {0}; a finite group was required")]
    NotFinite(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An intermediate quantity of an algorithm did not have its expected shape.
    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        found: usize,
        expected: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
