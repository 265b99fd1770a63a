//! Crate-wide error type.

use crate::quad::QuadResult;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quadrature did not meet its tolerance within the configured number
    /// of refinements. Carries the best available estimate.
    #[error("quadrature tolerance not met (best value {:?}, err {})", best.value, best.err_estimate)]
    ToleranceNotMet { best: QuadResult },

    /// Invalid sweep or verify configuration.
    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
