//! Exact scalars and dense linear algebra over the Gaussian rationals.

mod matrix;
mod scalar;
mod solve;

pub use matrix::{Mat, Vector};
pub use scalar::{arith, total_order, ArithOp, GaussRat};
pub use solve::{
    commutant_basis, generated_subspace, independent_subset, inverse, is_invariant, kernel_basis, rank, rref,
    solve, span_dim, Echelon,
};
