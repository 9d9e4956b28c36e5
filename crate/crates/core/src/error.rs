use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// `alpha == beta` makes `b = (beta + alpha) / (beta - alpha)` singular.
    #[error("alpha = beta: the parameter b = (beta+alpha)/(beta-alpha) is singular")]
    EqualParameters,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid quantum state: {0}")]
    InvalidState(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("non-unique solution ({dim}-dimensional): {what}")]
    NonUniqueSolution { what: String, dim: usize },

    #[error("verification failed: {0}")]
    VerificationFailure(String),

    #[error("out of family: {0}")]
    OutOfFamily(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("numerical overflow: {0}")]
    Overflow(String),

    #[error("quadrature did not converge (last change {change:e})")]
    QuadratureNonconvergence { change: f64 },

    #[error("coefficients are not polynomial in A of degree < {max_degree}")]
    InterpolationDegree { max_degree: usize },

    #[error("trajectory left the wedge at t = {t}")]
    WedgeExit { t: f64 },

    #[error("step size too large: relative energy drift {drift:e} exceeded the guard")]
    StepSizeTooLarge { drift: f64 },

    #[error("trajectory too short: spans {have} radial periods, need {need}")]
    InsufficientSpan { have: f64, need: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
