//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("grid construction failed: {0}")]
    Grid(String),

    /// Bundle extraction or quantile monotonicity failure during compression.
    #[error("compression failed: {0}")]
    Compression(String),

    #[error("dataset error: {0}")]
    Dataset(String),

    /// File content does not match the expected versioned schema.
    #[error("schema mismatch: {0}")]
    Schema(String),

    #[error("training aborted at epoch {epoch}: {reason}")]
    TrainingAborted { epoch: usize, reason: String },

    #[error("sampler error: {0}")]
    Sampler(String),

    #[error("family mismatch: expected `{expected}`, got `{actual}`")]
    FamilyMismatch { expected: String, actual: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
