use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Exit 1.
    ValidationFailed(Vec<String>),
    /// Exit 2.
    InvalidArgs(String),
    /// Exit 3.
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            Self::ValidationFailed(_) => 1,
            Self::InvalidArgs(_) => 2,
            Self::Io(_) => 3,
        }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Self::InvalidArgs(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ValidationFailed(names) => write!(f, "validation failed: {}", names.join(", ")),
            Self::InvalidArgs(m) => write!(f, "invalid arguments: {m}"),
            Self::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<curvtorus::Error> for CliError {
    fn from(e: curvtorus::Error) -> Self {
        Self::InvalidArgs(e.to_string())
    }
}
