use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter combination: {0}")]
    InvalidCombo(String),

    /// The symmetry results only apply when N·k is even.
    #[error("N·k = {nk} is odd; symmetric combination required")]
    OddNk { nk: u64 },

    #[error("degenerate combination: |A| = 0 (Z = 1)")]
    Degenerate,

    #[error("degenerate interval [1, {abs_a}]: need |A| >= 2")]
    DegenerateInterval { abs_a: BigInt },

    #[error("two combinations share |A| = {abs_a}; ordering is ambiguous")]
    DuplicateAbsA { abs_a: BigInt },

    #[error("sequence is empty")]
    EmptySequence,

    #[error("offset {delta} leaves the half interval (0, {limit}]")]
    DeltaOutOfInterval { delta: String, limit: String },

    #[error("offsets must be strictly increasing (offset {index} is not)")]
    NonIncreasingDeltas { index: usize },

    #[error("operation requires u {expected}, got u = {u}")]
    WrongSign { expected: &'static str, u: i64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("target value lies outside the derivative range on both subintervals")]
    OutOfRange,

    #[error("comparison undecided after refining to {bits} bits")]
    Undecided { bits: u64 },

    #[error("postcondition violated: {0}")]
    Postcondition(String),
}
