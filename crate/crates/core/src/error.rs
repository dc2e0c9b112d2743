use thiserror::Error;

/// Errors produced by the library.
///
/// The variants map onto distinct failure classes so front ends can pick an
/// exit status without inspecting messages.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// An exact computation would exceed a documented size or node limit.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// The requested object provably (or within the search budget) does not exist.
    #[error("infeasible: {0}")]
    Infeasible(String),
    /// Malformed input text (graph6, JSON documents).
    #[error("parse error: {0}")]
    Parse(String),
    /// A caller-asserted property did not hold.
    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}

pub(crate) fn resource<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Resource(msg.into()))
}
