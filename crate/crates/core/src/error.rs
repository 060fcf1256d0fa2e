use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrimeModulus(u64),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("polynomial is reducible")]
    ReduciblePolynomial,
    #[error("polynomial is not primitive")]
    NotPrimitive,
    #[error("generator is primitive; use the primitive predictor")]
    PrimitiveGenerator,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not in monic companion form: {0}")]
    NotCompanionShape(String),
    #[error("discrete logarithm of zero is undefined")]
    ZeroElement,
    #[error("field has {size} elements, above the log-table cap {cap}")]
    LogTableCapExceeded { size: u64, cap: u64 },
    #[error("the zero subspace is not a Grassmannian point")]
    ZeroSubspace,
    #[error("exponent list contains duplicates")]
    DuplicateExponents,
    #[error("orbit code has a single codeword; minimum distance is undefined")]
    SingleCodeword,
    #[error("radius {t} out of range for dimension {k}")]
    RadiusOutOfRange { t: usize, k: usize },
    #[error("malformed flag: {0}")]
    MalformedFlag(String),
    #[error("{k} does not divide {n}")]
    NonDivisorDimension { k: usize, n: usize },
    #[error("rows have rank {actual}, expected {expected}")]
    RankDeficient { expected: usize, actual: usize },
    #[error("no starting point found ({nodes} search nodes explored)")]
    DesignNotFound { nodes: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parameters too large: {0}")]
    TooLarge(String),
    #[error("order search exceeded cap {0}")]
    OrderSearchExceeded(u64),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
