use thiserror::Error;

use crate::minor::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("object mismatch: {0}")]
    ObjectMismatch(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(Violation),

    #[error("leading term of the zero element is undefined")]
    ZeroElement,

    #[error("unknown edge {0}")]
    UnknownEdge(usize),

    #[error("differentials do not compose to zero")]
    Composability,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("resource limit exceeded: {what} has size {size}, limit {limit}")]
    ResourceLimit {
        what: String,
        size: u128,
        limit: u128,
    },

    #[error("unknown graph spec `{0}`")]
    UnknownGraphSpec(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
