use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal consistency check failed; the input drawing is most likely
    /// not a good drawing.
    #[error("inconsistent drawing: {0}")]
    Inconsistent(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
