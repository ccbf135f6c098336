use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("negative degree {0}")]
    NegativeDegree(i64),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(usize, usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not admissible: {0}")]
    NotAdmissible(String),

    #[error("not extended symmetric: {0}")]
    NotInvariant(String),

    #[error("{what} exceeds cap: {value} > {cap}")]
    CapExceeded { what: String, value: usize, cap: usize },

    #[error("cap {cap} below required bound {required} for {what}")]
    CapTooSmall { what: String, cap: usize, required: usize },

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("malformed data: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

pub(crate) fn check_index(index: usize, max: usize) -> Result<()> {
    if index == 0 || index > max {
        Err(AlgebraError::IndexOutOfRange { index, max })
    } else {
        Ok(())
    }
}
