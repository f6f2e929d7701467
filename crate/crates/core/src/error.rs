use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value 0 is not allowed; permutations are written over 1..n")]
    ZeroValue,
    #[error("value {value} is out of range for a permutation of length {len}")]
    ValueOutOfRange { value: usize, len: usize },
    #[error("duplicate value {0}")]
    DuplicateValue(usize),
    #[error("cannot parse permutation {text:?}: {reason}")]
    PermutationSyntax { text: String, reason: String },
    #[error("cycle length q must be at least 1")]
    ZeroCycleLength,
    #[error("cannot parse pattern {text:?}: {reason}")]
    PatternSyntax { text: String, reason: String },
    #[error("cell ({column},{row}) lies outside the grid of a length-{len} pattern")]
    CellOutOfRange {
        column: usize,
        row: usize,
        len: usize,
    },
    #[error("unknown pattern name {0:?}")]
    UnknownPattern(String),
    #[error("n = {n} exceeds the brute-force bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
