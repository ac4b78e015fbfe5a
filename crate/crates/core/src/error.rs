use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("leaf count {n} out of range [{min}, {max}]")]
    LeafCountOutOfRange { n: usize, min: usize, max: usize },

    #[error("leaf counts differ: {left} vs {right}")]
    LeafCountMismatch { left: usize, right: usize },

    #[error("monomial degrees differ: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("position {position} out of range [1, {max}]")]
    PositionOutOfRange { position: usize, max: usize },

    #[error("invalid leaf word {0:?}: expected a non-empty string of 0/1 characters")]
    InvalidWord(String),

    #[error("word value {value} does not fit in {n} bits")]
    WordValueOutOfRange { value: u64, n: usize },

    #[error("lattice row {row}: {reason}")]
    InvalidLatticeRow { row: usize, reason: String },

    #[error("lattice row {row} is not in the kernel of the incidence matrix")]
    KernelViolation { row: usize },

    #[error("reduction did not terminate within {0} steps")]
    ReductionCap(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
