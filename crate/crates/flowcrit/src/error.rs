use thiserror::Error;

use crate::graph::{EdgeId, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("edge {0} out of range")]
    EdgeOutOfRange(EdgeId),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("boundary has {got} entries, expected {expected}")]
    BoundaryLength { expected: usize, got: usize },
    #[error("boundary sums to {sum} (mod 3) on the component of vertex {vertex}")]
    NotZ3Boundary { vertex: Vertex, sum: u8 },
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set contains the tip")]
    ContainsTip,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("edges {0} and {1} cannot be split off")]
    NotSplittable(EdgeId, EdgeId),
    #[error("invalid tip preflow: {0}")]
    InvalidPreflow(String),
    #[error("graph has {n} vertices, above the cap of {cap}")]
    AboveCap { n: usize, cap: usize },
    #[error("malformed canonical code")]
    BadCode,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Precondition(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
