use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A letter refers to a handle outside `1..=g`, or a word literal is malformed.
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("parse error at token {position} ({token:?}): {reason}")]
    Parse {
        position: usize,
        token: String,
        reason: String,
    },

    /// The requested operation is not available for this (g, k).
    #[error("unsupported context: {0}")]
    UnsupportedContext(String),

    #[error("context mismatch: expected genus {expected}, found {found}")]
    ContextMismatch { expected: usize, found: usize },

    /// The element does not project to the identity of the surface group.
    #[error("element is not in the center <z>: projection reduces to {residual}")]
    NotInCenter { residual: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {what} reached {limit}")]
    ResourceLimit { what: &'static str, limit: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("configuration error: {0}")]
    Configuration(String),
}

pub type Result<T> = std::result::Result<T, Error>;
