//! Decaying gain sequences for stochastic-approximation iterations.

use crate::error::Error;

/// Standard step-size decay exponent.
pub const STANDARD_ALPHA: f64 = 0.602;
/// Standard perturbation-size decay exponent.
pub const STANDARD_GAMMA: f64 = 0.101;

/// The gain pair (a_n, c_n) with
/// `a_n = a / (n + 1 + A)^alpha` and `c_n = c / (n + 1)^gamma`.
///
/// `A` is a stability offset that tempers the earliest steps. Constraints:
/// `a > 0`, `c > 0`, `A >= 0`, `alpha` in (0.5, 1], `gamma` in (0, 0.5].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GainSchedule {
    a: f64,
    stability: f64,
    alpha: f64,
    c: f64,
    gamma: f64,
}

impl GainSchedule {
    /// Validates and builds a schedule from `(a, A, alpha, c, gamma)`.
    pub fn new(a: f64, stability: f64, alpha: f64, c: f64, gamma: f64) -> Result<Self, Error> {
        if !a.is_finite() || a <= 0.0 {
            return Err(Error::invalid(
                "gains.a",
                format!("must be finite and > 0, got {a}"),
            ));
        }
        if !stability.is_finite() || stability < 0.0 {
            return Err(Error::invalid(
                "gains.A",
                format!("must be finite and >= 0, got {stability}"),
            ));
        }
        if !alpha.is_finite() || alpha <= 0.5 || alpha > 1.0 {
            return Err(Error::invalid(
                "gains.alpha",
                format!("must lie in (0.5, 1], got {alpha}"),
            ));
        }
        if !c.is_finite() || c <= 0.0 {
            return Err(Error::invalid(
                "gains.c",
                format!("must be finite and > 0, got {c}"),
            ));
        }
        if !gamma.is_finite() || gamma <= 0.0 || gamma > 0.5 {
            return Err(Error::invalid(
                "gains.gamma",
                format!("must lie in (0, 0.5], got {gamma}"),
            ));
        }
        Ok(GainSchedule {
            a,
            stability,
            alpha,
            c,
            gamma,
        })
    }

    /// Schedule with the standard exponents (alpha 0.602, gamma 0.101) and the
    /// stability offset set to 10% of the iteration budget.
    pub fn standard(a: f64, c: f64, iterations: usize) -> Result<Self, Error> {
        GainSchedule::new(
            a,
            0.1 * iterations as f64,
            STANDARD_ALPHA,
            c,
            STANDARD_GAMMA,
        )
    }

    /// The pair `(a_n, c_n)` for iteration index `n` (0-based).
    pub fn gains(&self, n: usize) -> (f64, f64) {
        let k = n as f64 + 1.0;
        let a_n = self.a / (k + self.stability).powf(self.alpha);
        let c_n = self.c / k.powf(self.gamma);
        (a_n, c_n)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn stability_offset(&self) -> f64 {
        self.stability
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}
