use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid model specification, configuration or data shape.
    #[error("validation: {0}")]
    Validation(String),

    /// Malformed or inconsistent input data.
    #[error("data: {0}")]
    Data(String),

    /// Numerical failure (ill-conditioning, loss of positive definiteness,
    /// nonstationarity where stationarity is required).
    #[error("numerical: {0}")]
    Numerical(String),

    /// Invalid parameters passed to a distribution kernel.
    #[error("distribution: {0}")]
    Distribution(String),

    /// Draw-file or manifest format problems.
    #[error("format: {0}")]
    Format(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }
    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
    pub fn distribution(msg: impl Into<String>) -> Self {
        Error::Distribution(msg.into())
    }
    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }
}
