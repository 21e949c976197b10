use thiserror::Error;

pub type Result<T, E = QesError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QesError {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("energy must be positive for this potential, got {0}")]
    NonPositiveEnergy(f64),

    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(f64),

    #[error("coefficient c_{index} is zero; same-parity ratio undefined")]
    ZeroDenominator { index: usize },

    #[error("constraint polynomial is identically zero")]
    ZeroPolynomial,

    #[error("no eigenvalue in bracket [{lo}, {hi}]")]
    NoEigenvalueInBracket { lo: f64, hi: f64 },

    #[error(
        "solver failed to converge after {iterations} iterations (bracket width {width:e}, mismatch {mismatch:e})"
    )]
    NoConvergence {
        iterations: usize,
        width: f64,
        mismatch: f64,
    },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

impl QesError {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        QesError::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
