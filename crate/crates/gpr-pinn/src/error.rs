use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A physical quantity or coordinate is outside its admissible range.
    #[error("domain error: {0}")]
    Domain(String),

    /// The explicit time stepping would be unstable for the given grid.
    #[error("stability error: {0}")]
    Stability(String),

    /// Array or parameter dimensions do not agree.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// An input that the operation cannot meaningfully process (e.g. an
    /// all-zero trace handed to a normalizer).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Training produced a non-finite loss and could not recover.
    #[error("numerical divergence: {0}")]
    Divergence(String),

    /// An experiment configuration failed validation.
    #[error("invalid config: {0}")]
    Config(String),

    /// A file or string could not be parsed into the expected structure.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
