use thiserror::Error;

/// Errors raised by the numerical routines of this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported dimension {0} (supported: 1..=3)")]
    UnsupportedDimension(usize),

    #[error("real part of the Gaussian matrix is not positive definite (smallest eigenvalue {min_eigenvalue:e})")]
    NotPositiveDefinite { min_eigenvalue: f64 },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("moment integral diverges: {0}")]
    DivergentMoment(String),

    #[error("integration radius {radius} too small: boundary shell carries {shell_fraction:e} of the estimate")]
    RadiusTooSmall { radius: f64, shell_fraction: f64 },

    #[error("weight is not a function of (|z_1|,...,|z_d|): {0}")]
    NonRadialWeight(String),

    #[error("coefficient bound could not be fitted: {0}")]
    FitFailed(String),

    #[error("parse error in `{field}`: {reason}")]
    Parse { field: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
