use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: usize, right: usize },

    #[error("genus must be at least 1")]
    ZeroGenus,

    #[error("index {index} out of range for genus {genus}")]
    IndexOutOfRange { index: usize, genus: usize },

    #[error("generator index {index} out of range 1..={max}")]
    GeneratorOutOfRange { index: usize, max: usize },

    #[error("class index {m} out of range for genus {genus} (max {max})")]
    ClassOutOfRange { m: usize, genus: usize, max: usize },

    #[error("genus {genus} unsupported: {reason}")]
    UnsupportedGenus { genus: usize, reason: &'static str },

    #[error("move {mv} not applicable: {reason}")]
    MoveNotApplicable { mv: String, reason: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("reduction step `{step}` deviated from its stated effect: {detail}")]
    ReductionInvariant { step: String, detail: String },

    #[error("check `{check}` failed: {detail}")]
    CheckFailed { check: String, detail: String },
}
