use thiserror::Error;

/// Errors produced by the model builders, solvers and sweep machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid truncation ({a},{b},{c}): every mode needs at least one photon")]
    InvalidTruncation { a: usize, b: usize, c: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("steady state is not unique or the solve is ill-conditioned: {0}")]
    DegenerateSteadyState(String),

    #[error("density matrix invariant violated: {0}")]
    InvalidDensityMatrix(String),

    #[error("integration diverged at t = {t}: {reason}; reduce the step size")]
    StepSize { t: f64, reason: String },

    #[error("correlation undefined: mean occupation {0:e} is below cutoff")]
    UndefinedCorrelation(f64),

    #[error("degenerate parameters: amplitude equations are singular")]
    DegenerateParameters,

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("eigenvalue solver failed")]
    Eigen,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
