use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {0}-{1} is not present")]
    EdgeNotPresent(Vertex, Vertex),

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),

    #[error("input graph is disconnected")]
    Disconnected,

    #[error("witness part {0} does not induce a connected subgraph")]
    PartNotConnected(usize),

    #[error("witness parts do not partition the vertex set: {0}")]
    NotAPartition(String),

    #[error("coloring covers {got} vertices but the graph has {expected}")]
    ColoringSize { expected: usize, got: usize },

    #[error("input too large for exhaustive search: {what} = {got} exceeds {limit}")]
    InputTooLarge {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("invalid red-blue domination instance: {0}")]
    InvalidInstance(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
