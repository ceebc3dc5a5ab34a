//! Error type shared across the imaging pipeline.

use thiserror::Error;

/// Errors produced by the imaging library.
#[derive(Debug, Error)]
pub enum SarError {
    /// A vector or image had the wrong length for the operation.
    #[error("size mismatch for {what}: expected {expected}, got {got}")]
    SizeMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    /// A numeric parameter violated its precondition (e.g. nonpositive rate).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A scene specification was inconsistent (duplicate or out-of-range targets).
    #[error("invalid scene: {0}")]
    Scene(String),

    /// A sampler configuration violated its invariants.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A diagnostic was asked for on data that cannot support it.
    #[error("protocol violation: {0}")]
    Protocol(String),

    /// A posterior summary was requested on insufficient samples.
    #[error("summary error: {0}")]
    Summary(String),

    /// An iterative solver diverged, typically from a too-large step size.
    #[error("step-size error: {0}")]
    StepSize(String),

    /// On-disk data did not match the expected format.
    #[error("malformed {format} data: {message}")]
    Format {
        format: &'static str,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, SarError>;
