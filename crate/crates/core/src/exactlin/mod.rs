//! Exact linear algebra over the rationals and over the two-element field.

mod f2;
mod qmatrix;
mod sparse;

pub use f2::{F2Error, F2Matrix, MAX_ENUMERATION_ROWS};
pub(crate) use f2::span as f2_span;
pub use qmatrix::{same_row_space, QMatrix, Rref};
pub use sparse::{sparse_rank, Pushed, SparseSystem, SparseVec};
