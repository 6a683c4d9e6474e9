use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular over F_{p} (rank {rank} < {dim})")]
    Singular { p: u64, rank: usize, dim: usize },
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid color lists: {0}")]
    InvalidLists(String),
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    /// True for malformed input text, as opposed to a well-formed input that
    /// violates a domain precondition.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
