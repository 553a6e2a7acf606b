//! Crate-wide error type.
//!
//! Every fallible operation in this crate returns [`Result`].  The variants
//! distinguish the ways a routine can refuse to answer: the arguments are
//! malformed ([`Error::InvalidArgument`]), the arguments are well formed
//! but outside the mathematical domain of the quantity ([`Error::Domain`],
//! e.g. an exactly divergent tail bound), the requested accuracy could not
//! be certified ([`Error::Accuracy`], which carries the error estimate
//! that *was* achieved so callers can decide whether to accept the value
//! anyway), or an output writer failed ([`Error::Io`]).

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument fails a precondition (wrong range, non-finite, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The gamma function was evaluated at one of its poles 0, -1, -2, ...
    #[error("gamma function pole at x = {0}")]
    GammaPole(f64),

    /// The requested quantity is mathematically undefined or divergent for
    /// these inputs (as opposed to merely hard to compute).
    #[error("domain error: {0}")]
    Domain(String),

    /// A routine could not certify the requested accuracy.  `achieved` is
    /// the estimated relative (or, where documented, absolute) error of the
    /// best value it could produce.
    #[error("accuracy failure in {context}: achieved error estimate {achieved:.3e}")]
    Accuracy {
        /// Which computation failed (human-readable).
        context: String,
        /// The error estimate that was achieved.
        achieved: f64,
    },

    /// An output writer failed.  Carries the rendered I/O error message so
    /// the whole enum stays cloneable.
    #[error("i/o failure: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Shorthand for an [`Error::InvalidArgument`] with a formatted message.
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Shorthand for an [`Error::Domain`] with a formatted message.
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Shorthand for an [`Error::Accuracy`].
    pub fn accuracy(context: impl Into<String>, achieved: f64) -> Self {
        Error::Accuracy {
            context: context.into(),
            achieved,
        }
    }
}
