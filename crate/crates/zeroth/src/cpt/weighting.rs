//! Probability weighting functions: non-decreasing maps of [0,1] onto itself
//! with w(0) = 0 and w(1) = 1, used to distort tail probabilities.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Inverse-S weighting curvature threshold: below this the curve stops being
/// monotone, so the constructor rejects it.
const INVERSE_S_MIN_ETA: f64 = 0.27;

/// A validated probability weighting function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightingFunction {
    /// w(p) = p; no distortion.
    Identity,
    /// w(p) = p^eta, eta > 0.
    Power { eta: f64 },
    /// w(p) = p^eta / (p^eta + (1-p)^eta)^(1/eta), the inverse-S curve;
    /// eta in (0.27, 1] keeps it monotone.
    InverseS { eta: f64 },
}

impl WeightingFunction {
    pub fn power(eta: f64) -> Result<Self, Error> {
        if !eta.is_finite() || eta <= 0.0 {
            return Err(Error::invalid(
                "weighting eta",
                format!("power weighting needs eta > 0, got {eta}"),
            ));
        }
        Ok(WeightingFunction::Power { eta })
    }

    pub fn inverse_s(eta: f64) -> Result<Self, Error> {
        if !eta.is_finite() || eta <= INVERSE_S_MIN_ETA || eta > 1.0 {
            return Err(Error::invalid(
                "weighting eta",
                format!("inverse-S weighting needs eta in (0.27, 1], got {eta}"),
            ));
        }
        Ok(WeightingFunction::InverseS { eta })
    }

    /// Evaluates the weighting at a probability `p` in [0, 1].
    pub fn eval(&self, p: f64) -> Result<f64, Error> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::invalid(
                "p",
                format!("probability must lie in [0, 1], got {p}"),
            ));
        }
        Ok(self.eval_unchecked(p))
    }

    /// Evaluation without the domain check, for internal callers that supply
    /// probabilities by construction. Endpoints are exact: w(0) = 0, w(1) = 1.
    pub(crate) fn eval_unchecked(&self, p: f64) -> f64 {
        match *self {
            WeightingFunction::Identity => p,
            WeightingFunction::Power { eta } => p.powf(eta),
            WeightingFunction::InverseS { eta } => {
                if p == 0.0 {
                    return 0.0;
                }
                if p == 1.0 {
                    return 1.0;
                }
                let num = p.powf(eta);
                let den = (num + (1.0 - p).powf(eta)).powf(1.0 / eta);
                num / den
            }
        }
    }
}

impl fmt::Display for WeightingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightingFunction::Identity => write!(f, "identity"),
            WeightingFunction::Power { eta } => write!(f, "power:{eta}"),
            WeightingFunction::InverseS { eta } => write!(f, "tk-{eta}"),
        }
    }
}

impl FromStr for WeightingFunction {
    type Err = Error;

    /// Parses the preset grammar used in benchmark configs:
    /// `identity`, `power:<eta>`, or `tk-<eta>` (e.g. `tk-0.61`).
    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "identity" {
            return Ok(WeightingFunction::Identity);
        }
        if let Some(eta) = s.strip_prefix("power:") {
            let eta: f64 = eta
                .parse()
                .map_err(|_| Error::invalid("weighting", format!("bad eta in {s:?}")))?;
            return WeightingFunction::power(eta);
        }
        if let Some(eta) = s.strip_prefix("tk-") {
            let eta: f64 = eta
                .parse()
                .map_err(|_| Error::invalid("weighting", format!("bad eta in {s:?}")))?;
            return WeightingFunction::inverse_s(eta);
        }
        Err(Error::invalid(
            "weighting",
            format!("unknown weighting {s:?}; expected identity, power:<eta>, or tk-<eta>"),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const SHIPPED: [WeightingFunction; 5] = [
        WeightingFunction::Identity,
        WeightingFunction::Power { eta: 0.5 },
        WeightingFunction::Power { eta: 2.0 },
        WeightingFunction::InverseS { eta: 0.61 },
        WeightingFunction::InverseS { eta: 0.69 },
    ];

    #[test]
    fn identity_is_identity() {
        assert_eq!(WeightingFunction::Identity.eval(0.3).unwrap(), 0.3);
    }

    #[test]
    fn endpoints_are_exact_for_all_shipped_functions() {
        for w in SHIPPED {
            assert_eq!(w.eval(0.0).unwrap(), 0.0, "{w}");
            assert_eq!(w.eval(1.0).unwrap(), 1.0, "{w}");
        }
    }

    #[test]
    fn inverse_s_at_one_half_matches_closed_form() {
        // Independently: 0.5^0.61 / (2 * 0.5^0.61)^(1/0.61) = 0.42063935433575617.
        let w = WeightingFunction::inverse_s(0.61).unwrap();
        let u = 0.5f64.powf(0.61);
        let expected = u / (2.0 * u).powf(1.0 / 0.61);
        assert_relative_eq!(w.eval(0.5).unwrap(), expected, epsilon = 1e-15);
        assert_relative_eq!(
            w.eval(0.5).unwrap(),
            0.420_639_354_335_756_17,
            epsilon = 1e-12
        );
        assert_relative_eq!(w.eval(0.5).unwrap(), 0.4206, epsilon = 5e-4);
    }

    #[test]
    fn all_shipped_functions_are_monotone_on_a_fine_grid() {
        for w in SHIPPED {
            let mut prev = w.eval(0.0).unwrap();
            for k in 1..=1000 {
                let p = k as f64 / 1000.0;
                let cur = w.eval(p).unwrap();
                assert!(cur >= prev, "{w} decreases at p={p}");
                assert!((0.0..=1.0).contains(&cur));
                prev = cur;
            }
        }
    }

    #[test]
    fn probability_domain_is_enforced() {
        let w = WeightingFunction::Identity;
        assert!(w.eval(-0.1).is_err());
        assert!(w.eval(1.1).is_err());
        assert!(w.eval(f64::NAN).is_err());
    }

    #[test]
    fn constructors_enforce_parameter_ranges() {
        assert!(WeightingFunction::power(0.0).is_err());
        assert!(WeightingFunction::power(-1.0).is_err());
        assert!(WeightingFunction::power(2.0).is_ok());
        assert!(WeightingFunction::inverse_s(0.27).is_err());
        assert!(WeightingFunction::inverse_s(0.28).is_ok());
        assert!(WeightingFunction::inverse_s(1.0).is_ok());
        assert!(WeightingFunction::inverse_s(1.01).is_err());
    }

    #[test]
    fn preset_names_round_trip() {
        for (name, expect) in [
            ("identity", WeightingFunction::Identity),
            ("power:2", WeightingFunction::Power { eta: 2.0 }),
            ("tk-0.61", WeightingFunction::InverseS { eta: 0.61 }),
            ("tk-0.69", WeightingFunction::InverseS { eta: 0.69 }),
        ] {
            let parsed: WeightingFunction = name.parse().unwrap();
            assert_eq!(parsed, expect);
            let shown: WeightingFunction = parsed.to_string().parse().unwrap();
            assert_eq!(shown, expect);
        }
        assert!("tk-0.2".parse::<WeightingFunction>().is_err());
        assert!("power:x".parse::<WeightingFunction>().is_err());
        assert!("prelec".parse::<WeightingFunction>().is_err());
    }
}
