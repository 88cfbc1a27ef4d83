use thiserror::Error;

use crate::hypergraph::{Part, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("edges must be non-empty")]
    EmptyEdge,

    #[error("edge multiplicity must be at least 1")]
    ZeroMultiplicity,

    #[error("edge of cardinality {rank} exceeds the rank limit {limit}")]
    RankLimit { rank: usize, limit: usize },

    #[error("part {0} is not in the edge index set")]
    UnknownPart(Part),

    #[error("{0} is defined only for loopless hypergraphs")]
    HasLoops(&'static str),

    #[error("{0} is defined only for simple hypergraphs")]
    NotSimple(&'static str),

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("hypergraph is not exactly connected")]
    NotExactlyConnected,

    #[error("enumeration budget of {0} exceeded")]
    BudgetExceeded(u64),

    #[error("invalid part-size profile: {0}")]
    InvalidProfile(String),

    #[error("vertices must be distinct")]
    SameVertex,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}
