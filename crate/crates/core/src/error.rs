use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a unigraph")]
    NotUnigraph,
    #[error("not a threshold graph")]
    NotThreshold,
    #[error("graph has {n} vertices, oracle cap is {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
