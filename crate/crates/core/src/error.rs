use thiserror::Error;

use crate::liealg::Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: String, found: String },

    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("points must be pairwise distinct")]
    RepeatedPoints,

    #[error("unsupported rank n={n} for {family}")]
    UnsupportedRank { family: Family, n: usize },

    #[error("{0} is not supported for this operation")]
    UnsupportedFamily(Family),

    #[error("weight not dominant: {0:?}")]
    NotDominant(Vec<i64>),

    #[error("weight {0:?} has negative entries; only polynomial gl weights are supported")]
    NonPolynomial(Vec<i64>),

    #[error("weight {weight:?} does not occur as a highest weight in the {m}-th tensor power")]
    NotRealizable { weight: Vec<i64>, m: usize },

    #[error("matrix is not in the span of the Lie algebra basis")]
    NotInAlgebra,

    #[error("operator is not scalar on the module")]
    NotScalar,

    #[error("vector is not in the span of the given basis")]
    NotInSpan,

    #[error("modules are over different Lie algebras")]
    SpecMismatch,

    #[error("carrier dimension {dim} exceeds the cap {cap} (REPCUR_MAX_DIM)")]
    DimensionCap { dim: usize, cap: usize },

    #[error("Cartan action has non-integral or non-diagonalizable weights")]
    BadWeights,

    #[error("isotypic decomposition does not account for the whole module ({found} of {expected})")]
    Decomposition { expected: usize, found: usize },

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
