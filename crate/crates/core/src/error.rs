use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),

    #[error("graph has {requested} vertices, the cap is {cap}")]
    TooManyVertices { requested: usize, cap: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("endpoints must be distinct (got {0} twice)")]
    SameVertex(usize),

    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("vertex set is not contained in the graph")]
    NotSubset,

    #[error("{evaluator}: size {size} exceeds guard {limit}")]
    SizeGuard {
        evaluator: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid chord diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid four-term instance: {0}")]
    InvalidFourTerm(String),

    #[error("could not parse dyadic value {0:?}")]
    ParseDyadic(String),
}
