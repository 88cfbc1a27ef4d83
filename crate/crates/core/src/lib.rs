pub mod bounds;
pub mod constructions;
pub mod eigen;
pub mod elementary;
pub mod error;
pub mod exact;
pub mod hypergraph;
pub mod identities;
pub mod io;
pub mod matrix;
pub mod poly;
pub mod random;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use hypergraph::{Edge, EdgeIndexSet, Hypergraph, Part, VertexId};
pub use matrix::{AssociatedGraph, IntMatrix, LabeledMatrix, UnifiedMatrix};
pub use poly::{char_poly, CharPoly, Poly};

/// Default step budget for exponential enumerations.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/unified-matrix.md")]
    mod unified_matrix {}
    #[doc = include_str!("../../../book/src/spectrum.md")]
    mod spectrum {}
    #[doc = include_str!("../../../book/src/exact-walks.md")]
    mod exact_walks {}
    #[doc = include_str!("../../../book/src/elementary.md")]
    mod elementary {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
