use thiserror::Error;

/// Failure to read a serialized value back.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecodeError {
    #[error("unexpected end of input at byte {0}")]
    Truncated(usize),
    #[error("bad header")]
    BadHeader,
    #[error("{0} trailing bytes after graph")]
    TrailingBytes(usize),
    #[error("malformed value: {0}")]
    Malformed(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(#[from] GraphError),
}

/// A violated structural invariant of a diagram graph.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("port {0} appears more than once")]
    DuplicatePort(u32),
    #[error("edge ({out_port}, {in_port}) does not run from an out-port to an in-port")]
    EdgeKind { out_port: u32, in_port: u32 },
    #[error("port {0} is used by more than one edge")]
    PortReused(u32),
    #[error("port {0} is neither matched by an edge nor listed as dangling")]
    Unaccounted(u32),
    #[error("port {0} is both matched and dangling, or dangling on the wrong side")]
    BadDangling(u32),
    #[error("dangling list is not sorted by label")]
    UnsortedDangling,
    #[error("graph contains a closed path")]
    Cycle,
    #[error("matching joins port {0}, which is not a free spot of the right kind or is used twice")]
    InvalidMatching(u32),
}

/// Failure of an iterative graph construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("step {step}: matching index {index} out of range ({count} matchings available)")]
    MatchingIndex {
        step: usize,
        index: usize,
        count: usize,
    },
    #[error("step {step}: port {port} is not a gray spot of the graph built so far")]
    UnknownGray { step: usize, port: u32 },
    #[error("step {step}: white spot {index} does not exist on a vertex with {available} out-lines")]
    UnknownWhite {
        step: usize,
        index: usize,
        available: usize,
    },
    #[error("step {step}: a spot is joined twice")]
    RepeatedSpot { step: usize },
}
