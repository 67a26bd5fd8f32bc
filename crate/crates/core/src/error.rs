use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input rejected before any computation happened.
    #[error("invalid input: {0}")]
    Validation(String),

    /// A checked coefficient or exponent operation would have wrapped.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("inexact division: remainder has a term of degree {degree}")]
    InexactDivision { degree: u64 },

    #[error("degree {degree} exceeds capacity {cap}")]
    Capacity { degree: u64, cap: u64 },

    /// An internal identity failed; always a bug, never bad input.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}
