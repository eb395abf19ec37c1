use thiserror::Error;

/// Errors produced by graph, pattern, matching and controllability operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("simple directed graph cannot carry a loop on vertex {0}")]
    LoopInSimpleGraph(usize),

    #[error("operation requires a {expected} graph")]
    KindMismatch { expected: &'static str },

    #[error("shape mismatch: expected {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },

    #[error("pattern is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("row index {row} out of range 1..={rows}")]
    RowOutOfRange { row: usize, rows: usize },

    #[error("free entry at ({0}, {1}); bipartite graphs are defined for star/zero patterns only")]
    FreeEntryInBipartite(usize, usize),

    #[error("bipartite endpoint ({0}, {1}) out of bank bounds")]
    BipartiteEndpointOutOfRange(usize, usize),

    #[error("duplicate bipartite edge ({0}, {1})")]
    DuplicateBipartiteEdge(usize, usize),

    #[error("not a matching: {0}")]
    InvalidMatching(String),

    #[error("matching is not constrained")]
    NotConstrained,

    #[error("invalid force list: {0}")]
    InvalidForceList(String),

    #[error("input set must not be empty for a system with at least one state vertex")]
    EmptyInputSet,

    #[error("not a symmetric tree: {0}")]
    NotATree(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
