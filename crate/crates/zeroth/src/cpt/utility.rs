//! Utility functions applied to gains and losses: non-decreasing maps of the
//! non-negative half-line with u(0) = 0.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A validated utility function on non-negative magnitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UtilityFunction {
    /// u(x) = x.
    Identity,
    /// u(x) = x^sigma with sigma in (0, 1]; concave on gains.
    Power { sigma: f64 },
}

impl UtilityFunction {
    pub fn power(sigma: f64) -> Result<Self, Error> {
        if !sigma.is_finite() || sigma <= 0.0 || sigma > 1.0 {
            return Err(Error::invalid(
                "utility sigma",
                format!("power utility needs sigma in (0, 1], got {sigma}"),
            ));
        }
        Ok(UtilityFunction::Power { sigma })
    }

    /// Evaluates the utility at a magnitude `x >= 0`.
    pub fn eval(&self, x: f64) -> Result<f64, Error> {
        if !x.is_finite() || x < 0.0 {
            return Err(Error::invalid(
                "x",
                format!("utility domain is finite x >= 0, got {x}"),
            ));
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: f64) -> f64 {
        match *self {
            UtilityFunction::Identity => x,
            UtilityFunction::Power { sigma } => x.powf(sigma),
        }
    }
}

impl fmt::Display for UtilityFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UtilityFunction::Identity => write!(f, "identity"),
            UtilityFunction::Power { sigma } => write!(f, "power:{sigma}"),
        }
    }
}

impl FromStr for UtilityFunction {
    type Err = Error;

    /// Parses `identity` or `power:<sigma>`.
    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "identity" {
            return Ok(UtilityFunction::Identity);
        }
        if let Some(sigma) = s.strip_prefix("power:") {
            let sigma: f64 = sigma
                .parse()
                .map_err(|_| Error::invalid("utility", format!("bad sigma in {s:?}")))?;
            return UtilityFunction::power(sigma);
        }
        Err(Error::invalid(
            "utility",
            format!("unknown utility {s:?}; expected identity or power:<sigma>"),
        ))
    }
}
