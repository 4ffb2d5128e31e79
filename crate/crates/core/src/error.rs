use thiserror::Error;

/// Errors raised by the library.
///
/// [`Error::Consistency`] marks two independent routes disagreeing; every
/// other variant is a rejected input or a refused request.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown subgroup `{0}`")]
    UnknownSubgroup(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    #[error("ambiguous result: {0}")]
    Ambiguity(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// True for the "two formulas disagree" class of failures.
    pub fn is_consistency(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
