use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field error: {0}")]
    Field(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular: {0}")]
    Singular(String),

    /// A product or action left the span it was required to stay in.
    #[error("{structure} is not closed: element at basis indices {indices:?} leaves the span")]
    Closure {
        structure: String,
        indices: Vec<usize>,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A verification gate failed; the report lists the counterexamples.
    #[error("gate failed: {0}")]
    Gate(String),

    #[error("{path}: {message}")]
    Parse { path: String, message: String },

    #[error("unknown catalog entry {name:?}; available: {available}")]
    UnknownEntry { name: String, available: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
