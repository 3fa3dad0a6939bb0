use thiserror::Error;

/// Errors raised by the code analysis and verification routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("word length {0} outside 1..=256")]
    InvalidLength(usize),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("coordinate {coord} out of range for length {n}")]
    CoordOutOfRange { coord: usize, n: usize },

    #[error("code has dimension 0")]
    EmptyCode,

    #[error("generator rows are linearly dependent (rank {rank} < {k})")]
    NotInjective { rank: usize, k: usize },

    #[error("representation is not effective (rank {rank} < {r})")]
    NotEffective { rank: usize, r: usize },

    #[error("entropy bound needs d >= 3, got d = {0}")]
    EpsilonZero(usize),

    #[error("out of regime: {0}")]
    OutOfRegime(String),

    #[error("unknown code name: {0}")]
    UnknownCode(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("table data unavailable: {0}")]
    TableUnavailable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
