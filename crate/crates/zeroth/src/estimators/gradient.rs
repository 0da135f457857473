//! Gradient estimation from noisy function evaluations only.
//!
//! Two estimators with very different measurement budgets:
//! coordinate-wise central differences cost 2N oracle calls per estimate,
//! while the simultaneous-perturbation form costs exactly 2 regardless of
//! dimension.

use crate::error::Error;
use crate::estimators::perturbation::Perturbation;
use crate::oracle::NoisyOracle;

/// A gradient estimate together with its measurement cost.
#[derive(Debug, Clone, PartialEq)]
pub struct GradientEstimate {
    /// The estimated gradient.
    pub gradient: Vec<f64>,
    /// Oracle evaluations spent producing it.
    pub evals_used: u64,
    /// Mean of the probe values; a free estimate of the objective at `theta`.
    pub probe_mean: f64,
}

fn check_probe_inputs(theta: &[f64], c_n: f64) -> Result<(), Error> {
    if theta.is_empty() {
        return Err(Error::invalid("theta", "dimension must be >= 1"));
    }
    if theta.iter().any(|x| !x.is_finite()) {
        return Err(Error::invalid("theta", "components must be finite"));
    }
    if !c_n.is_finite() || c_n <= 0.0 {
        return Err(Error::invalid(
            "c_n",
            format!("must be finite and > 0, got {c_n}"),
        ));
    }
    Ok(())
}

fn finite_sample<O: NoisyOracle + ?Sized>(oracle: &mut O, point: &[f64]) -> Result<f64, Error> {
    let y = oracle.eval(point)?;
    if !y.is_finite() {
        return Err(Error::NonFiniteOracle {
            value: y,
            point: point.to_vec(),
        });
    }
    Ok(y)
}

/// Coordinate-wise central-difference gradient estimate (2N oracle calls).
///
/// Component i is `(f(theta + c_n e_i) - f(theta - c_n e_i)) / (2 c_n)`.
/// Probes are taken in coordinate order, + before -.
pub fn kw_gradient<O: NoisyOracle + ?Sized>(
    oracle: &mut O,
    theta: &[f64],
    c_n: f64,
) -> Result<GradientEstimate, Error> {
    check_probe_inputs(theta, c_n)?;
    let n = theta.len();
    let mut gradient = Vec::with_capacity(n);
    let mut probe_sum = 0.0;
    let mut probe = theta.to_vec();
    for i in 0..n {
        probe[i] = theta[i] + c_n;
        let y_plus = finite_sample(oracle, &probe)?;
        probe[i] = theta[i] - c_n;
        let y_minus = finite_sample(oracle, &probe)?;
        probe[i] = theta[i];
        gradient.push((y_plus - y_minus) / (2.0 * c_n));
        probe_sum += y_plus + y_minus;
    }
    Ok(GradientEstimate {
        gradient,
        evals_used: 2 * n as u64,
        probe_mean: probe_sum / (2.0 * n as f64),
    })
}

/// Simultaneous-perturbation gradient estimate (exactly 2 oracle calls).
///
/// With probes `y+ = f(theta + c_n delta)` and `y- = f(theta - c_n delta)`,
/// component i is `(y+ - y-) / (2 c_n delta_i)`. All components share the
/// same two measurements, so the cost is independent of dimension. Probes
/// are taken + first, then -.
pub fn spsa_gradient<O: NoisyOracle + ?Sized>(
    oracle: &mut O,
    theta: &[f64],
    c_n: f64,
    delta: &Perturbation,
) -> Result<GradientEstimate, Error> {
    check_probe_inputs(theta, c_n)?;
    if delta.len() != theta.len() {
        return Err(Error::invalid(
            "delta",
            format!(
                "perturbation dimension {} does not match theta dimension {}",
                delta.len(),
                theta.len()
            ),
        ));
    }
    let signs = delta.values();
    let plus: Vec<f64> = theta.iter().zip(signs).map(|(t, s)| t + c_n * s).collect();
    let minus: Vec<f64> = theta.iter().zip(signs).map(|(t, s)| t - c_n * s).collect();
    let y_plus = finite_sample(oracle, &plus)?;
    let y_minus = finite_sample(oracle, &minus)?;
    let diff = y_plus - y_minus;
    let gradient = signs.iter().map(|s| diff / (2.0 * c_n * s)).collect();
    Ok(GradientEstimate {
        gradient,
        evals_used: 2,
        probe_mean: (y_plus + y_minus) / 2.0,
    })
}
