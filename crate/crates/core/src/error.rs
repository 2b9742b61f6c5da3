use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("no separator exists: {0} and {1} are adjacent")]
    NoSeparator(VertexId, VertexId),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A structural consequence that must hold for a minimum AT in a clean
    /// graph did not hold. Indicates a bug or a broken precondition.
    #[error("structure violation: {0}")]
    StructureViolation(String),

    #[error("work bound exceeded: {0}")]
    WorkBound(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
