use crate::graph::VertexId;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: VertexId, order: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has no edges")]
    Edgeless,
    #[error("minimum degree must be positive (vertex {0} is isolated)")]
    IsolatedVertex(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    ParallelEdge(VertexId, VertexId),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph of order {order} exceeds the exact-solver limit of {limit} vertices")]
    TooLarge { order: usize, limit: usize },
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("{0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
