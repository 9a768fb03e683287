use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed argument: out-of-range vertex, bad pair, wrong kind, and so on.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The operation's precondition does not hold for the given arguments.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An exact division or consistency check failed; the input deck cannot come from a graph.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
