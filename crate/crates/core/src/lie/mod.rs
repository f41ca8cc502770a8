//! Lie algebras as exact structure-constant tensors.

pub mod algebra;
pub mod assoc;
pub mod forms;
pub mod module;
pub mod structure;
pub mod subalgebra;

pub use algebra::{make_lie_algebra, unit, AlgebraJson, LieAlgebra};
pub use assoc::MatrixAlgebra;
pub use forms::{inertia, killing_form, killing_signature, BilinearForm, Inertia};
pub use module::{action_matrices, commutant, commutant_of_actions, Commutant};
pub use structure::{
    center, centroid, centroid_full_system, centroid_via_cyclic_vector, complex_structure, derived_subalgebra,
    generating_set, ideal_generated, structure_analysis, subalgebra_generated, Centroid, ComplexStructure, SimpleIdeal,
    StructureKind,
};
pub use subalgebra::SubalgebraEmbedding;
