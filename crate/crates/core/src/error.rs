use thiserror::Error;

use crate::riordan::Flavor;

/// Errors produced by the library. Every operation is exact, so these are
/// all precondition violations rather than numerical failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed rational `{0}`")]
    ParseRational(String),

    #[error("multinomial parts sum to {sum}, expected {n}")]
    PartsMismatch { n: usize, sum: usize },

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("constant term must be {expected}, found {found}")]
    ConstantTerm {
        expected: &'static str,
        found: String,
    },

    #[error("series is not invertible (zero constant term)")]
    NotInvertible,

    #[error("series reversion needs f(0) = 0 and an invertible linear coefficient")]
    NotRevertible,

    #[error("umbra moments must start with 1, found {0}")]
    NotNormalized(String),

    #[error("unknown umbra `{0}`")]
    UnknownUmbra(String),

    #[error("index ({n}, {k}) outside truncation order {order}")]
    IndexOutOfRange { n: usize, k: usize, order: usize },

    #[error("recursion indices must satisfy 1 <= k <= n, got ({n}, {k})")]
    RecursionIndex { n: usize, k: usize },

    #[error("{requested} rows requested but order {order} supports at most {}", order + 1)]
    TooManyRows { requested: usize, order: usize },

    #[error("flavors differ: {left} vs {right}")]
    FlavorMismatch { left: Flavor, right: Flavor },

    #[error("n must be at least 1")]
    ZeroIndex,

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("column is shorter than the array: {len} < {needed}")]
    ColumnTooShort { len: usize, needed: usize },

    #[error("invalid triangle: {0}")]
    InvalidTriangle(String),

    #[error("{0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
