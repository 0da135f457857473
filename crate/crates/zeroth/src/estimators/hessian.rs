//! Four-measurement Hessian estimation and positive-definite repair.

use crate::error::Error;
use crate::estimators::perturbation::Perturbation;
use crate::matrix::Matrix;
use crate::oracle::NoisyOracle;

/// A Hessian estimate, the gradient estimate its first probe pair yields for
/// free, and the measurement cost.
#[derive(Debug, Clone, PartialEq)]
pub struct HessianEstimate {
    /// Symmetrized Hessian estimate.
    pub hessian: Matrix,
    /// Gradient estimate from the (y+, y-) pair, as in the two-measurement form.
    pub gradient: Vec<f64>,
    /// Oracle evaluations spent (always 4).
    pub evals_used: u64,
    /// Mean of the two centered probes (y+ + y-)/2.
    pub probe_mean: f64,
}

/// Simultaneous-perturbation Hessian estimate from exactly 4 oracle calls.
///
/// Measurements: `y+ = f(theta + c_n delta)`, `y- = f(theta - c_n delta)`,
/// `y+t = f(theta + c_n delta + c_tilde delta_t)`,
/// `y-t = f(theta - c_n delta + c_tilde delta_t)` (in that order). With
/// one-sided difference quotients `G+_i = (y+t - y+)/(c_tilde dt_i)` and
/// `G-_i = (y-t - y-)/(c_tilde dt_i)`, the raw matrix is
/// `M_ij = (G+_i - G-_i)/(2 c_n d_j)` and the estimate is its
/// symmetrization `(M + M^T)/2`, exactly symmetric entry by entry.
pub fn spsa_hessian<O: NoisyOracle + ?Sized>(
    oracle: &mut O,
    theta: &[f64],
    c_n: f64,
    c_tilde: f64,
    delta: &Perturbation,
    delta_tilde: &Perturbation,
) -> Result<HessianEstimate, Error> {
    if theta.is_empty() {
        return Err(Error::invalid("theta", "dimension must be >= 1"));
    }
    if theta.iter().any(|x| !x.is_finite()) {
        return Err(Error::invalid("theta", "components must be finite"));
    }
    for (name, c) in [("c_n", c_n), ("c_tilde", c_tilde)] {
        if !c.is_finite() || c <= 0.0 {
            return Err(Error::invalid(
                name,
                format!("must be finite and > 0, got {c}"),
            ));
        }
    }
    let n = theta.len();
    if delta.len() != n || delta_tilde.len() != n {
        return Err(Error::invalid(
            "delta",
            "perturbation dimensions must match theta dimension",
        ));
    }

    let d = delta.values();
    let dt = delta_tilde.values();
    let plus: Vec<f64> = theta.iter().zip(d).map(|(t, s)| t + c_n * s).collect();
    let minus: Vec<f64> = theta.iter().zip(d).map(|(t, s)| t - c_n * s).collect();
    let plus_t: Vec<f64> = plus.iter().zip(dt).map(|(t, s)| t + c_tilde * s).collect();
    let minus_t: Vec<f64> = minus.iter().zip(dt).map(|(t, s)| t + c_tilde * s).collect();

    let mut take = |point: &[f64]| -> Result<f64, Error> {
        let y = oracle.eval(point)?;
        if !y.is_finite() {
            return Err(Error::NonFiniteOracle {
                value: y,
                point: point.to_vec(),
            });
        }
        Ok(y)
    };
    let y_plus = take(&plus)?;
    let y_minus = take(&minus)?;
    let y_plus_t = take(&plus_t)?;
    let y_minus_t = take(&minus_t)?;

    let diff = y_plus - y_minus;
    let gradient: Vec<f64> = d.iter().map(|s| diff / (2.0 * c_n * s)).collect();

    let g_plus: Vec<f64> = dt
        .iter()
        .map(|s| (y_plus_t - y_plus) / (c_tilde * s))
        .collect();
    let g_minus: Vec<f64> = dt
        .iter()
        .map(|s| (y_minus_t - y_minus) / (c_tilde * s))
        .collect();

    let mut hessian = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..=i {
            let m_ij = (g_plus[i] - g_minus[i]) / (2.0 * c_n * d[j]);
            let m_ji = (g_plus[j] - g_minus[j]) / (2.0 * c_n * d[i]);
            let s = (m_ij + m_ji) / 2.0;
            hessian.set(i, j, s);
            hessian.set(j, i, s);
        }
    }

    Ok(HessianEstimate {
        hessian,
        gradient,
        evals_used: 4,
        probe_mean: (y_plus + y_minus) / 2.0,
    })
}

/// Clips the eigenvalues of a symmetric matrix at `delta_reg`, returning a
/// symmetric positive-definite matrix usable in a Newton step.
///
/// Decomposes `h = Q L Q^T`, replaces each eigenvalue l with
/// `max(l, delta_reg)`, and recomposes; the result is re-symmetrized entry
/// by entry so symmetry holds exactly despite rounding.
pub fn regularize_hessian(h_bar: &Matrix, delta_reg: f64) -> Result<Matrix, Error> {
    if !delta_reg.is_finite() || delta_reg <= 0.0 {
        return Err(Error::invalid(
            "delta_reg",
            format!("must be finite and > 0, got {delta_reg}"),
        ));
    }
    h_bar.require_symmetric("h_bar")?;
    let eig = h_bar
        .to_na()
        .try_symmetric_eigen(f64::EPSILON, 0)
        .ok_or_else(|| Error::Numerical("symmetric eigendecomposition did not converge".into()))?;
    let clipped = nalgebra::DVector::from_iterator(
        eig.eigenvalues.len(),
        eig.eigenvalues.iter().map(|l| l.max(delta_reg)),
    );
    let recomposed = &eig.eigenvectors
        * nalgebra::DMatrix::from_diagonal(&clipped)
        * eig.eigenvectors.transpose();
    let n = h_bar.dim();
    let mut out = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..=i {
            let s = (recomposed[(i, j)] + recomposed[(j, i)]) / 2.0;
            out.set(i, j, s);
            out.set(j, i, s);
        }
    }
    Ok(out)
}
