//! Fat graphs (ribbon graphs): graphs with a cyclic order of the edge ends
//! at every vertex, which is exactly the data needed to thicken the graph
//! into an oriented surface.
//!
//! The crate computes the boundary walks and surface invariants of that
//! thickening, decomposes suitable graphs into straight-ahead curve
//! systems, decides isomorphism through canonical codes, enumerates all
//! four-regular fat graphs on a few vertices up to isomorphism, and
//! constructs parametric families of two-curve fillings of closed
//! surfaces, including a connected-sum operation that raises genus while
//! preserving boundary structure.
//!
//! Start with [`graph::FatGraph`], or with the worked chapters under
//! [`guide`], whose examples run as doc-tests.

pub mod boundary;
pub mod census;
pub mod curves;
pub mod dot;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod iso;
pub mod report;

pub use boundary::{
    boundary_walks, is_connected, surface_invariants, BoundaryWalk, SurfaceInvariants,
};
pub use curves::{classify_filling, standard_curves, Curve, CurveDecomposition, FillingReport};
pub use error::Error;
pub use graph::{Dart, FatGraph};
pub use iso::{are_isomorphic, canonical_code, CanonicalCode};

/// The user guide. Each chapter is included from the book sources in
/// `book/src`, so every example shown in the rendered book is compiled and
/// executed by `cargo test --doc`.
pub mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/fat-graphs.md")]
    pub mod fat_graphs {}
    #[doc = include_str!("../../../book/src/boundaries.md")]
    pub mod boundaries {}
    #[doc = include_str!("../../../book/src/curves.md")]
    pub mod curves {}
    #[doc = include_str!("../../../book/src/isomorphism.md")]
    pub mod isomorphism {}
    #[doc = include_str!("../../../book/src/census.md")]
    pub mod census {}
    #[doc = include_str!("../../../book/src/families.md")]
    pub mod families {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
