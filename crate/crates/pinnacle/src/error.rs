use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the mathematical input was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// A size guard was hit (exhaustive sweeps refuse oversized inputs by default).
    #[error("size guard: {0}")]
    Guard(String),

    /// The requested operation does not support inputs of this size.
    #[error("unsupported size: {0}")]
    Unsupported(String),

    /// Cross-checked results disagreed; the computation was aborted.
    #[error("integrity error: {0}")]
    Integrity(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
