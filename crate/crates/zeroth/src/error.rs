//! Error type shared across the crate.

/// Errors produced by estimators, functionals, and optimization drivers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A constructor or operation received an argument outside its domain.
    #[error("invalid {name}: {reason}")]
    InvalidParam { name: &'static str, reason: String },

    /// An oracle produced a non-finite value; carries the offending probe point.
    #[error("oracle returned non-finite value {value} at probe point {point:?}")]
    NonFiniteOracle { value: f64, point: Vec<f64> },

    /// A perturbation distribution whose inverse moments are unbounded (or
    /// undefined) was requested; only distributions bounded away from zero
    /// are usable.
    #[error("unsupported perturbation distribution {tag:?}: {reason}")]
    UnsupportedPerturbation { tag: String, reason: String },

    /// A dense linear-algebra step (eigendecomposition, factorization) failed.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParam {
            name,
            reason: reason.into(),
        }
    }
}
