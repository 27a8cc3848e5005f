use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("closure exceeds the order cap of {cap} elements")]
    ClosureExceedsCap { cap: usize },

    #[error("generator {index} is not a valid permutation: {reason}")]
    InvalidPermutation { index: usize, reason: String },

    #[error("inconsistent presentation: {0}")]
    InconsistentPresentation(String),

    #[error("not a group: {axiom} fails at {witness:?}")]
    NotAGroup { axiom: String, witness: Vec<usize> },

    #[error("group order {order} is not a power of {p}")]
    NotPrimePower { order: usize, p: u64 },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("catalog fingerprint mismatch for {label}: expected {expected}, computed {actual}")]
    FingerprintMismatch {
        label: String,
        expected: String,
        actual: String,
    },

    #[error("B recursion exceeded depth {0}")]
    RecursionDepthExceeded(usize),

    #[error("central quotient of order {order} exceeds the cap {cap}")]
    QuotientTooLarge { order: usize, cap: usize },

    #[error("tuple space {size} exceeds the cap {cap}")]
    TupleCapExceeded { size: u128, cap: u128 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
