//! Exact analysis of finite-dimensional real Lie algebras given by rational
//! structure constants.
//!
//! The crate computes Lie–Poisson data on the dual space (coadjoint orbit
//! ranks, the index, isotropy algebras), polynomial Casimir functions, the
//! spectral closedness test for groups of the form `R^n ⋊_A R`, and folds the
//! results into a report of necessary conditions for factoriality of the
//! regular representation of the corresponding simply connected solvable group.
//!
//! All arithmetic is exact over the rationals. Randomized routines take their
//! seed explicitly.

pub mod casimir;
pub mod catalog;
pub mod coadjoint;
pub mod document;
pub mod error;
pub mod exactalg;
pub mod lie;
pub mod report;
pub mod spectral;

pub use error::{Error, Result};
pub use exactalg::{MultiPoly, PolyMatrix, RatMatrix, Rational};
pub use lie::{LieAlgebra, LinMap, Subspace};
