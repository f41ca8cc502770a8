use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("structure tensor has inconsistent dimensions: {0}")]
    DimensionMismatch(String),
    #[error("antisymmetry fails for basis pair ({0}, {1})")]
    AntisymmetryViolation(usize, usize),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),
    #[error("algebra is not simple")]
    NotSimple,
    #[error("module is not closed under the action")]
    ModuleNotClosed,
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("inclusion does not intertwine brackets")]
    NotHomomorphism,
    #[error("inclusion is not injective")]
    NotInjective,
    #[error("structure analysis undecided: no rational idempotent found in a centroid of dimension {0}")]
    Undecided(usize),
    #[error("invalid algebra definition: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown family or entry `{0}`")]
    UnknownFamily(String),
    #[error("rank parameters out of bounds for `{name}`: {reason}")]
    RankOutOfBounds { name: String, reason: String },
    #[error("weights are not symmetric under negation")]
    WeightsNotSymmetric,
    #[error("target has size {expected} but {got} weights were given")]
    SizeMismatch { expected: usize, got: usize },
    #[error("weights do not form a multiset of su(2) weight strings")]
    NotAWeightSystem,
    #[error("spin {0}/2 blocks have no rational unitary realization")]
    UnsupportedSpin(i64),
    #[error("target entry `{0}` is not in the su(n) family")]
    WrongFamily(String),
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error("theta is not an involution")]
    NotInvolutive,
    #[error("theta is not an automorphism on basis pair ({0}, {1})")]
    NotAutomorphism(usize, usize),
    #[error("-B(X, theta Y) is not positive definite")]
    BThetaNotPositiveDefinite,
    #[error("eigenspace dimensions {k} + {p} do not add up to {dim}")]
    EigenspaceDimMismatch { k: usize, p: usize, dim: usize },
    #[error("theta has shape {0}x{1}, expected {2}x{2}")]
    ShapeMismatch(usize, usize, usize),
    #[error("decomposition has p = 0")]
    CompactInput,
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("degree {degree} out of range for a space of dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("complement is not invariant under the subalgebra")]
    NotReductive,
    #[error("differential maps degree {0} invariants outside the invariant subspace")]
    ImageNotInvariant(usize),
    #[error("d o d is nonzero starting in degree {0}")]
    DSquaredNonzero(usize),
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("J is not a complex structure")]
    NotComplexStructure,
    #[error("k and J(k) do not form a Cartan decomposition")]
    NotCartanComplement,
    #[error("bilinear form is not invariant")]
    NotInvariant,
    #[error("bilinear form is not symmetric")]
    NotSymmetric,
    #[error("algebra is not compact simple")]
    NotCompactSimple,
    #[error("pullback is not proportional to the Killing form")]
    InconsistentRatio,
    #[error("index {0} is not a non-negative integer")]
    NonIntegerIndex(String),
    #[error("dual Coxeter number unknown for this algebra")]
    MissingCartanType,
    #[error("cocycle check failed: {0}")]
    Check(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Cartan(#[from] CartanError),
}
