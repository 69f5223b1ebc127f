//! Exact-arithmetic tools for the maximal determinant problem.
//!
//! A nondegenerate 0/1 matrix `M` of order `n`, bordered with the row
//! `(0, ..., 0, 1)` and a column of ones, is the node matrix of a simplex in
//! the unit cube. Row sums of absolute values of the inverse of that node
//! matrix are at least 2, and all equal 2 when `|det M|` is maximal, so any
//! row sum above 2 certifies that `M` is not a maximizer. This crate computes
//! those sums exactly, together with the simplex quantities they encode, and
//! provides the ±1 ↔ 0/1 reductions and small-order exhaustive searches.

pub mod binary;
pub mod certify;
pub mod cli;
pub mod error;
pub mod format;
pub mod geometry;
pub mod linalg;
pub mod report;
pub mod search;
pub mod simplex;
pub mod transform;

pub use binary::{Matrix01, MatrixPM1};
pub use certify::{certify_01, row_abs_sums, RowSums, Verdict, VerdictKind};
pub use error::{Error, Result};
pub use linalg::{det_exact, inverse_exact, mat_mul, IntMatrix, RatMatrix, Rational};
pub use simplex::{barycentric_at, border_01, lagrange_data, node_from_vertices, LagrangeData, NodeMatrix};
