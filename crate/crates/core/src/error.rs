use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed graph, hypergraph, capacity or bipartite file.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Well-formed input that the requested operation cannot accept.
    #[error("{0}")]
    Input(String),

    #[error("graph not connected")]
    Disconnected,

    /// A caller broke a documented precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// An internal consistency check failed (e.g. a neighborhood oracle
    /// produced a non-minimal set).
    #[error("integrity error: {0}")]
    Integrity(String),

    #[error("universe of size {size} exceeds brute-force limit {limit}")]
    TooLarge { size: usize, limit: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
