use thiserror::Error;

/// Errors raised by graph construction, the set predicates and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {0} vertices; at least 2 are required")]
    TooFewVertices(usize),
    #[error("landmark set needs at least {required} vertices, got {got}")]
    LandmarkSetTooSmall { required: usize, got: usize },
    #[error("duplicate vertex {0} in landmark set")]
    DuplicateLandmark(usize),
    #[error("{what} exceeds the configured cap ({value} > {cap})")]
    CapExceeded {
        what: &'static str,
        value: u128,
        cap: u128,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("cover instance is infeasible: row {0} has no covering column")]
    Infeasible(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
