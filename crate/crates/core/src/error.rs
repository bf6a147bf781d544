use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("usage error: {0}")]
    Usage(String),
    /// The threshold rejected every row, so there is nothing left to approximate.
    #[error("all rows discarded: every projected row norm exceeds tau = {tau}")]
    AllRowsDiscarded { tau: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
