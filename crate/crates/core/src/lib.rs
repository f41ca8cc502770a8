//! Exact relative Lie algebra cohomology for simple real Lie algebras.

pub mod error;
pub mod geodesic;
pub mod lie;
pub mod linalg;

pub use error::{CartanError, CatalogError, CocycleError, CohomologyError, LieError};
pub mod cartan;
pub mod catalog;
pub mod cocycle;
pub mod cohomology;
