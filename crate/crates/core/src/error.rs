use thiserror::Error;

/// Errors shared across the crate. Parse-level failures carry the 1-based
/// line number of the offending input line.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: vertex {id} out of range 1..={n}")]
    VertexRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop on vertex {id}")]
    SelfLoop { line: usize, id: usize },
    #[error("contraction: {0}")]
    Contract(String),
    #[error("instance too large for exhaustive search: n={n} exceeds cap {cap}")]
    Capacity { n: usize, cap: usize },
    #[error("anchor sets: {0}")]
    Anchors(String),
    #[error("supplied set is not a vertex cover: edge {{{u}, {v}}} uncovered")]
    UncoveredEdge { u: usize, v: usize },
    #[error("mode: {0}")]
    Mode(String),
    #[error("formula shape: {0}")]
    Shape(String),
    #[error("parameter: {0}")]
    Param(String),
    #[error("tree decomposition: {0}")]
    Decomposition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
