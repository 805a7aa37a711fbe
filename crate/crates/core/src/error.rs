use thiserror::Error;

/// Errors raised by the catalog, K-theory and base-change engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be positive (got n = 0)")]
    ZeroRank,

    #[error("cutoff must be positive (got 0)")]
    ZeroCutoff,

    #[error(
        "cutoff {cutoff} is too small for n = {n}: at least {required} is needed to host {labels} distinct labels"
    )]
    CutoffTooSmall {
        n: usize,
        cutoff: usize,
        required: usize,
        labels: usize,
    },

    #[error("expected {expected} continuous parameters, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("K-classes live over different presentations ({left} vs {right})")]
    PresentationMismatch { left: String, right: String },

    #[error("{generator} is not a generator of {presentation}")]
    UnknownGenerator {
        generator: String,
        presentation: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
