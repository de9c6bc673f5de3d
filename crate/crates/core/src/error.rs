use thiserror::Error;

/// Error taxonomy shared by the whole crate.
///
/// `InvalidArgument` means the caller broke a precondition (out-of-range
/// vertex, subset not contained in the host, pair of the wrong kind).
/// `InvalidInput` means the instance violates the promised graph class and
/// the violation was detected downstream. `Internal` marks states the
/// underlying theory rules out; hitting one is a bug or corrupted input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal error: {0}")]
    Internal(String),
    /// An exponential-time routine refused an oversized instance.
    #[error("refused: {0}")]
    Refused(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid_argument<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
