use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the operation's domain (negative natural, empty list, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A numeral value that breaks its representation's canonicality rule.
    #[error("invalid representation: {0}")]
    Validity(String),

    #[error("index {index} out of range for sequence of length {len}")]
    Index { index: u64, len: usize },

    #[error("value does not fit in a machine integer")]
    Overflow,

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("non-canonical literal at byte {pos}: {msg}")]
    NonCanonical { pos: usize, msg: String },

    #[error("usage error: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    /// True for errors caused by malformed input text or invocation rather
    /// than by the values themselves.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::NonCanonical { .. } | Error::Usage(_)
        )
    }
}
