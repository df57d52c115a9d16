//! Involutions in finite Coxeter groups and the structure of their
//! centralizers, computed with exact arithmetic.

pub mod classicmodels;
pub mod error;
pub mod exactalg;
pub mod involutions;
pub mod permengine;
pub mod rootsys;
pub mod structure;
pub mod tables;

pub use error::{Error, Result};

/// Scalars of every root system: the field `Q(√5)`.
pub type Scalar = exactalg::QSqrt5;
pub type Matrix = exactalg::Mat<Scalar>;
pub type Vector = Vec<Scalar>;
