use thiserror::Error;

/// Errors surfaced by the library and the command-line front end.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument was outside the domain of the operation.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A documented precondition of the operation does not hold for the input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Enumeration would exceed the configured size bound.
    #[error("capacity exceeded: {what} has {size} elements, bound is {bound}")]
    Capacity {
        what: String,
        size: u128,
        bound: u128,
    },

    /// User-supplied text could not be parsed.
    #[error("parse error at `{token}`: {message}")]
    Parse { token: String, message: String },

    /// A mathematical invariant the implementation relies on failed to hold.
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
