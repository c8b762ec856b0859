use thiserror::Error;

/// Errors surfaced by the precoding and simulation layers.
#[derive(Debug, Error)]
pub enum Error {
    /// A Gram matrix fell below the rank tolerance, usually because
    /// duplicate or collinear codewords were combined.
    #[error("rank-deficient RF matrix: smallest Gram eigenvalue {min_eig:.3e} below tolerance {tol:.3e}")]
    RankDeficient { min_eig: f64, tol: f64 },

    /// Matrix dimensions do not line up.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Exhaustive search space exceeds the configured guard.
    #[error("search space too large: {candidates} candidate sets exceed the limit of {limit}")]
    TooLarge { candidates: u128, limit: u128 },

    /// A phase is undefined for a zero entry.
    #[error("cannot quantize the phase of a zero entry (index {0})")]
    ZeroEntry(usize),

    /// Simulation configuration violates an invariant.
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),

    /// Aggregation over an empty result table.
    #[error("empty result table")]
    Empty,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
