//! Exact arithmetic kernel: rationals, multivariate polynomials and
//! fraction-free linear algebra over both.

mod bareiss;
mod matrix;
mod poly;
mod polymatrix;
mod rational;
mod sparse;

pub use matrix::{canonical_kernel_vector, rref, RatMatrix};
pub use poly::{Monomial, MultiPoly};
pub use polymatrix::{GenericRank, PolyMatrix, SAMPLE_COUNT, SAMPLE_MAX, SYMBOLIC_LIMIT};
pub use rational::{format_rational, int, is_rational_square, parse_rational, rat, Rational};
pub use sparse::{sparse_kernel, SparseRow};
