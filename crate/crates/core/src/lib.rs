//! Braxtopes and related generalized simplices.
//!
//! A braxtope is a convex polytope defined over an ordered vertex array
//! x_0 < x_1 < ... < x_n whose facets come in two explicit families: a run
//! of simplices T_i and a window family E_j. Together with multiplexes,
//! cyclic polytopes, and the two-parameter (r,d) families, they form a
//! hierarchy of "generalized simplices" that interpolate between the
//! simplex and more complicated polytopes while keeping every face
//! description explicit.
//!
//! This crate constructs these facet families from their defining
//! formulas, rebuilds face lattices by intersection closure, computes
//! f-vectors, flag vectors, and h-vectors, builds and shells the pulling
//! triangulation, and realizes braxtopes with exact rational coordinates
//! verified against a brute-force convex-hull oracle. The [`checks`]
//! module packages each structural statement as a machine check with
//! pass/fail reports and witnesses; the `brax` binary exposes everything
//! on the command line.
//!
//! All combinatorial data is exact; all geometry is arbitrary-precision
//! rational. Nothing here rounds.

#![forbid(unsafe_code)]

pub mod checks;
pub mod document;
pub mod error;
pub mod family;
pub mod generators;
pub mod geometry;
pub mod invariants;
pub mod lattice;
pub mod shelling;

pub use error::Error;
pub use family::{FacetFamily, FacetLabel, VertexId, VertexSet};
pub use geometry::{Point, Rational, Realization};
pub use invariants::{FVector, FlagVector, HVector};
pub use lattice::FaceLattice;
