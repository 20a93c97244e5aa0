use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph contains an odd cycle and is not bipartite")]
    NotBipartite,

    #[error("graph has no edges")]
    NoEdges,

    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("input too large for exhaustive enumeration: {what} is {actual}, limit is {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("invalid exact cover: {0}")]
    InvalidCover(String),

    #[error("vertex set must have {expected} elements, got {actual}")]
    WrongSetSize { expected: usize, actual: usize },

    #[error("k = {k} must exceed 1 + max_uv nu(G - N[u,v]) = {bound}")]
    KTooSmall { k: usize, bound: usize },

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid X3C instance: {0}")]
    InvalidInstance(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
