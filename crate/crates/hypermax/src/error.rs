use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("integer overflow while computing {context}")]
    Overflow { context: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {edge:?}: {reason}")]
    InvalidEdge { edge: Vec<usize>, reason: String },

    #[error("edge {edge:?} is already present")]
    DuplicateEdge { edge: Vec<usize> },

    #[error("edge {edge:?} is not present")]
    MissingEdge { edge: Vec<usize> },

    #[error("size guard violated for {what}: {detail}")]
    SizeGuard { what: String, detail: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn overflow(context: impl Into<String>) -> Self {
        Error::Overflow {
            context: context.into(),
        }
    }

    pub fn guard(what: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::SizeGuard {
            what: what.into(),
            detail: detail.into(),
        }
    }
}
