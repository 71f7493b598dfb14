use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic 2 is not supported for this operation")]
    CharacteristicTwo,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large (must be below 2^32)")]
    ModulusTooLarge(u64),
    #[error("quadratic parameter {d} is a square in the base field (root {root})")]
    SquareParameter { d: String, root: String },
    #[error("quadratic extensions must sit over the rationals or a prime field")]
    NestedExtension,
    #[error("cannot parse scalar literal `{literal}`: {reason}")]
    ParseScalar { literal: String, reason: String },
    #[error("unknown field specification `{0}`")]
    UnknownField(String),
    #[error("field {0} is infinite; enumeration is unavailable")]
    InfiniteField(String),
    #[error("search space of size {size} exceeds the cap of {cap}")]
    CapExceeded { size: String, cap: u64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid structure constants: {0}")]
    InvalidTable(String),
    #[error("expected the algebra I_n: {0}")]
    NotInFamily(String),
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("matrix is not orthogonal: (Q Q^T - E) has a nonzero entry at ({row}, {col})")]
    NotOrthogonal { row: usize, col: usize },
    #[error("matrix is not skew-symmetric: S[{row},{col}] != -S[{col},{row}]")]
    NotSkew { row: usize, col: usize },
    #[error("field {field} has no root of {equation}")]
    MissingRoot { field: String, equation: String },
    #[error("not a Rota-Baxter operator: {0}")]
    NotRotaBaxter(String),
    #[error("case certificate failed: {0}")]
    CertificateFailed(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
