use thiserror::Error;

/// Errors surfaced by the segmentation pipeline.
#[derive(Error, Debug)]
pub enum Error {
    /// Tensor or image shapes do not satisfy an operation's contract.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// A NaN or infinity reached a numeric operation.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// A precondition unrelated to shapes was violated.
    #[error("contract error: {0}")]
    Contract(String),

    /// The predicted disc region is empty, so the vertical CDR is undefined.
    #[error("undefined CDR: predicted disc region is empty")]
    UndefinedCdr,

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("data error: {0}")]
    Data(String),

    /// Training produced a non-finite loss and was aborted.
    #[error("numeric abort: {0}")]
    NanAbort(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("image error: {0}")]
    Image(#[from] image::ImageError),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
