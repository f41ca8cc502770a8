//! Exact rational linear algebra.

mod bareiss;
pub mod echelon;
pub(crate) mod int;
pub mod matrix;
pub mod polynomial;
pub mod rational;

pub use bareiss::{bareiss_det, bareiss_rank};
pub use echelon::{canonical_span, to_dense, to_sparse, RowEchelon, SparseVec};
pub use matrix::{combine, Coordinates, Matrix};
pub use polynomial::Polynomial;
pub use rational::{q, qi, ParseRationalError, Rational};
