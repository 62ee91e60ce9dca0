use thiserror::Error;

/// Errors raised anywhere in the pipeline.
///
/// The variants are grouped so a driver can map them onto exit codes:
/// parse and usage problems, invalid maps, resource exhaustion and
/// mathematical domain failures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("negative exponent {0}")]
    NegativeExponent(i64),

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("polynomial is not univariate in `{0}`")]
    NotUnivariate(String),

    #[error("invalid dynamical system: {0}")]
    InvalidMap(String),

    #[error("not a morphism: the coordinates have a common projective zero")]
    NotMorphism,

    #[error("singular matrix")]
    SingularMatrix,

    #[error("point {0} is not periodic with period dividing {1}")]
    NotPeriodic(String, u32),

    #[error("irrational spectrum: {0}")]
    IrrationalSpectrum(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("degenerate chart {chart}: {reason}")]
    DegenerateChart { chart: usize, reason: String },

    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invalid_map(msg: impl Into<String>) -> Self {
        Error::InvalidMap(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
