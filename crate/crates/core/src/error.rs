use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order {n} outside supported range [{min}, {max}]")]
    OrderOutOfRange { n: usize, min: usize, max: usize },

    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),

    #[error("order {n} too large (max {max})")]
    OrderTooLarge { n: usize, max: usize },

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("constraint violated: {0}")]
    SpecViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}
