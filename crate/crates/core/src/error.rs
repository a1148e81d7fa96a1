use thiserror::Error;

/// Errors raised by constructors and operations in this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A parameter lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid support [{lo}, {hi}]: lower bound must be below upper bound")]
    InvalidSupport { lo: f64, hi: f64 },
    #[error("density is not finite at {at}")]
    NonFinite { at: f64 },
    #[error("sample is empty")]
    EmptySample,
    #[error("sample of size {got} is too small, need at least {need}")]
    UndersizedSample { got: usize, need: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
