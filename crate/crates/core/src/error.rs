use thiserror::Error;

/// Errors raised by graph construction, enumeration and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge or arc ({0}, {1})")]
    Duplicate(usize, usize),

    #[error("antiparallel arcs between {0} and {1}")]
    Antiparallel(usize, usize),

    #[error("digraph is not an orientation of the given graph: {0}")]
    NotAnOrientation(String),

    #[error("not a permutation of the vertex set")]
    NotAPermutation,

    #[error("invalid plane tree: {0}")]
    InvalidTree(String),

    #[error("invalid Halin graph: {0}")]
    InvalidHalin(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what} cap exceeded: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable identifier of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::SelfLoop(_) => "self-loop",
            Error::Duplicate(..) => "duplicate",
            Error::Antiparallel(..) => "antiparallel",
            Error::NotAnOrientation(_) => "not-an-orientation",
            Error::NotAPermutation => "not-a-permutation",
            Error::InvalidTree(_) => "invalid-tree",
            Error::InvalidHalin(_) => "invalid-halin",
            Error::Precondition(_) => "precondition",
            Error::CapExceeded { .. } => "cap-exceeded",
            Error::VerificationFailed(_) => "verification-failed",
            Error::Parse(_) => "parse",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
