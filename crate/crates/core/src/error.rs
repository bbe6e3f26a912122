use crate::graph::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("node {node} out of range for graph with {n} nodes")]
    NodeOutOfRange { node: NodeId, n: usize },

    #[error("operation requires a graph with at least one node")]
    EmptyGraph,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("node {0} is frozen and no longer updates")]
    NodeFrozen(NodeId),

    #[error("run was executed without trace recording")]
    TraceNotRecorded,

    #[error("partitions cover different node universes ({left} vs {right} nodes)")]
    UniverseMismatch { left: usize, right: usize },

    #[error("formula undefined: {0}")]
    Undefined(String),

    /// A correctness property that must hold for every input was violated.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// The engine disagreed with an oracle during an experiment.
    #[error("oracle mismatch for graph seed {seed}: {detail}\n--- graph ---\n{graph}")]
    OracleMismatch {
        seed: u64,
        detail: String,
        graph: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_) | Error::OracleMismatch { .. })
    }
}
