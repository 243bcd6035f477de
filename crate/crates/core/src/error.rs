use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation undefined on the zero tensor")]
    ZeroTensor,
    #[error("group element is singular (condition number {0:.3e})")]
    SingularGroupElement(f64),
    #[error("algebra already has a unit element")]
    AlreadyUnital,
    #[error("not a soliton: residual {0:.3e}")]
    NotSoliton(f64),
    #[error("no rational within tolerance of {0}")]
    SnapFailed(f64),
    #[error("empty support")]
    EmptySupport,
    #[error("min-norm point iteration cap reached")]
    MinNormNoConvergence,
    #[error("curve parameter t must be nonzero")]
    ZeroParameter,
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("n must be at least 2 (got {0})")]
    DimensionTooSmall(usize),
    #[error("tensor format: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
