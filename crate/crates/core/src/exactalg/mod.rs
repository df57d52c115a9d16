//! Exact scalars and dense linear algebra.

mod matrix;
mod qsqrt5;

pub use matrix::{dot, Field, Mat};
pub use qsqrt5::QSqrt5;
