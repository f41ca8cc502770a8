//! Relative Chevalley-Eilenberg cohomology with trivial real coefficients.

mod complex;
mod forms;
mod pair;
mod symmetric;

pub use complex::{
    cohomology_dims, differential, invariant_forms, invariants, lie_derivative, lie_derivative_by, m_actions,
    relative_differential, CohomologyReport, DegreeReport,
};
pub use forms::{form_basis, AlternatingForm, MAX_SPACE_DIM};
pub use pair::{PairDescription, ReductivePair};
pub use symmetric::invariant_symmetric_forms;
