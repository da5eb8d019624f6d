use thiserror::Error;

use crate::exterior::KForm;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate basis name `{0}`")]
    DuplicateBasisName(String),
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket entry ({i}, {j}) must have i < j")]
    NonIncreasingPair { i: usize, j: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,

    #[error("cannot contract a scalar")]
    CannotContractScalar,
    #[error("l.c.K. condition needs even dimension at least 4, got {0}")]
    LckDimension(usize),
    #[error("fundamental form is degenerate (top power vanishes)")]
    DegenerateForm,
    #[error("no 1-form θ satisfies dΩ = Ω ∧ θ")]
    NoLeeForm,
    #[error("the solution θ of dΩ = Ω ∧ θ is not closed")]
    LeeFormNotClosed { theta: KForm },

    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("metric is degenerate")]
    DegenerateMetric,
    #[error("complex structure is not compatible with the metric: {0}")]
    Incompatible(String),
    #[error("complex structure does not preserve the isotropy subalgebra")]
    IsotropyNotPreserved,
    #[error("Sasaki structures live in odd dimension, got {0}")]
    EvenDimension(usize),
    #[error("Sasaki data fails: {0}")]
    SasakiInvalid(String),

    #[error("invalid modification: {0}")]
    InvalidModification(String),
    #[error("derivation set violates the pair condition: {0}")]
    PairCondition(String),
    #[error("modification maps use different derivation lists")]
    MismatchedDerivations,
    #[error("input is not a Vaisman structure: {0}")]
    NotVaisman(String),
    #[error("Lee field lies in the derived algebra")]
    LeeFieldInDerivedAlgebra,
    #[error("algebra is not unimodular")]
    NotUnimodular,
    #[error("unrecognized shape: {0}")]
    UnrecognizedShape(String),
    #[error(
        "Reeb field is not central, so the algebra-level quotient is undefined; \
         use the pair-level Kähler algebra (g, span{{η}}, J, dφ) from `kahler_pair` instead"
    )]
    NotCentral,
    #[error("ω is not a 2-cocycle (axiom (v) fails)")]
    CocycleViolation,
    #[error("{0}")]
    InvalidKahler(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },
}
