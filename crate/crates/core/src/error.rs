use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

/// Domain errors. Every variant names the violated precondition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix exceeds the {limit}x{limit} size limit")]
    TooLarge { limit: usize },
    #[error("exterior power degree {k} out of range 0..={n}")]
    DegreeOutOfRange { k: usize, n: usize },
    #[error("exterior power would have {count} basis elements (limit 10000)")]
    ExteriorTooLarge { count: u128 },
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("non-hyperbolic: {0}")]
    NonHyperbolic(String),
    #[error("iterate m must be at least 1")]
    ZeroIterate,
    #[error("enumeration out of range: {0}")]
    EnumerationLimit(String),
    #[error("boundary of boundary is nonzero in degree {degree}")]
    BoundarySquareNonzero { degree: usize },
    #[error("invalid chain complex: {0}")]
    InvalidComplex(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("inconsistent exact sequence: {0}")]
    InconsistentSequence(String),
    #[error("sign must be +1 or -1, got {0}")]
    InvalidSign(i64),
    #[error("non-manifold adjacency: {0}")]
    NonManifold(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("malformed model: {0}")]
    MalformedModel(String),
    #[error("model has a cycle: {0}")]
    Cycle(String),
}
