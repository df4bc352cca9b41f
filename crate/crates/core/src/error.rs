use alloc::string::String;
use core::fmt;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed arguments: out-of-range vertex ids, bad parameters, invalid decompositions.
    InvalidInput(String),
    /// A strategy breaks its own declared constraints (budget, movement, radius).
    InvalidStrategy(String),
    /// A strategy was required to win and does not.
    NotWinning(String),
    /// A configured size or state cap was exceeded.
    ResourceLimit(String),
    /// A construction produced something that fails self-verification.
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn limit(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(m) => write!(f, "invalid input: {m}"),
            Error::InvalidStrategy(m) => write!(f, "invalid strategy: {m}"),
            Error::NotWinning(m) => write!(f, "strategy does not win: {m}"),
            Error::ResourceLimit(m) => write!(f, "resource limit exceeded: {m}"),
            Error::Internal(m) => write!(f, "internal invariant violated: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
