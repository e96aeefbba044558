use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("points do not affinely span the ambient space (affine rank {rank}, ambient dimension {ambient})")]
    DegeneratePolytope { rank: usize, ambient: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension {0} is outside the supported range 1..=6")]
    UnsupportedDimension(usize),

    #[error("polytope is not reflexive: {0}")]
    NotReflexive(String),

    #[error("reflexivity criteria disagree: three-condition test says {conditions}, facet test says {facets}")]
    CriterionMismatch { conditions: bool, facets: bool },

    #[error("Hodge numbers need ambient dimension {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },

    #[error("sub-polytope is not contained in the super-polytope")]
    NotContained,

    #[error("invalid conifold data: {0}")]
    InvalidDelta(String),

    #[error("polynomials live in rings with different variables or relations")]
    IncompatibleRelations,

    #[error("relation {0} does not decrease in the lexicographic variable order")]
    NonTerminatingRelations(String),

    #[error("relations are not confluent: critical pair at {0} has distinct normal forms")]
    NonConfluentRelations(String),

    #[error("series is not invertible: {0}")]
    NotInvertible(String),

    #[error("insufficient truncation order: need {needed}, have {have}")]
    InsufficientOrder { needed: usize, have: usize },

    #[error("series operation is undefined: {0}")]
    UndefinedSeriesOperation(String),

    #[error("logarithm appears to a power higher than one")]
    HigherLogPower,

    #[error("operator has no Frobenius basis of the required shape: {0}")]
    UnsupportedOperator(String),

    #[error("division by zero: {0} vanishes")]
    DivisionByZero(&'static str),

    #[error("value {0} lies outside the real branch [0, 1/4]")]
    OutOfBranch(String),

    #[error("group presentation is not finite (relation matrix has rank {rank} < {generators})")]
    InfiniteGroup { rank: usize, generators: usize },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
