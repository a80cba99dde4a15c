use thiserror::Error;

/// Errors surfaced by the library API.
///
/// `Internal` marks conditions that are mathematically impossible on valid
/// inputs (alternant division leaving a remainder, a highest weight vertex
/// that matches no known class); hitting one means an arithmetic bug, not a
/// user error.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("rank too small: {0}")]
    RankTooSmall(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
