//! Exact rank-dependent evaluation of the prospect functional on finite
//! discrete distributions.
//!
//! The functional values a random outcome X relative to a reference point b as
//!
//! ```text
//! C(X) = integral_0^inf w+( P(u+((X-b)_+) > t) ) dt
//!      - integral_0^inf w-( P(u-((X-b)_-) > t) ) dt
//! ```
//!
//! where (v)_+ = max(v, 0) and (v)_- = -min(v, 0). For a finite distribution
//! both integrands are piecewise-constant in t, so each integral is a finite
//! sum over the sorted distinct utility levels; no quadrature is involved.

use crate::cpt::{DiscreteDistribution, UtilityFunction, WeightingFunction};

/// Parameters of the prospect functional: reference point, gain/loss
/// utilities, and gain/loss probability weightings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CptSpec {
    /// Reference point b; outcomes above it are gains, below it losses.
    pub reference: f64,
    pub u_plus: UtilityFunction,
    pub u_minus: UtilityFunction,
    pub w_plus: WeightingFunction,
    pub w_minus: WeightingFunction,
}

impl CptSpec {
    /// Identity utilities and weightings: the functional reduces to E[X] - b.
    pub fn identity(reference: f64) -> Self {
        CptSpec {
            reference,
            u_plus: UtilityFunction::Identity,
            u_minus: UtilityFunction::Identity,
            w_plus: WeightingFunction::Identity,
            w_minus: WeightingFunction::Identity,
        }
    }

    /// The classic curved preset: power utility sigma = 0.88 on both sides,
    /// inverse-S weightings with eta 0.61 on gains and 0.69 on losses.
    pub fn curved_preset(reference: f64) -> Self {
        CptSpec {
            reference,
            u_plus: UtilityFunction::Power { sigma: 0.88 },
            u_minus: UtilityFunction::Power { sigma: 0.88 },
            w_plus: WeightingFunction::InverseS { eta: 0.61 },
            w_minus: WeightingFunction::InverseS { eta: 0.69 },
        }
    }
}

/// A prospect value split into its gain and loss integrals,
/// with `value = gain_part - loss_part`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CptValue {
    pub value: f64,
    pub gain_part: f64,
    pub loss_part: f64,
}

/// One side's tail integral: sum over sorted distinct positive utility
/// levels t_k (t_0 = 0) of w(P(U > t_k)) * (t_{k+1} - t_k).
fn tail_integral(mut levels: Vec<(f64, f64)>, w: &WeightingFunction) -> f64 {
    if levels.is_empty() {
        return 0.0;
    }
    levels.sort_by(|a, b| a.0.total_cmp(&b.0));
    // Merge duplicate levels so the tail steps are over distinct values.
    let mut merged: Vec<(f64, f64)> = Vec::with_capacity(levels.len());
    for (t, p) in levels {
        match merged.last_mut() {
            Some(last) if last.0 == t => last.1 += p,
            _ => merged.push((t, p)),
        }
    }
    let mut tail: f64 = merged.iter().map(|(_, p)| p).sum();
    let mut prev_level = 0.0;
    let mut acc = 0.0;
    for &(t, p) in &merged {
        acc += (t - prev_level) * w.eval_unchecked(tail.clamp(0.0, 1.0));
        prev_level = t;
        tail -= p;
    }
    acc
}

/// Evaluates the prospect functional exactly on a finite discrete
/// distribution.
///
/// Gains (outcomes above the reference) and losses (below) are valued
/// separately through their utilities and tail weightings; the result is
/// `gain_part - loss_part` by construction.
pub fn cpt_exact_discrete(dist: &DiscreteDistribution, spec: &CptSpec) -> CptValue {
    let mut gains = Vec::new();
    let mut losses = Vec::new();
    for (&x, &p) in dist.outcomes().iter().zip(dist.probabilities()) {
        if p == 0.0 {
            continue;
        }
        let v = x - spec.reference;
        if v > 0.0 {
            let level = spec.u_plus.eval_unchecked(v);
            if level > 0.0 {
                gains.push((level, p));
            }
        } else if v < 0.0 {
            let level = spec.u_minus.eval_unchecked(-v);
            if level > 0.0 {
                losses.push((level, p));
            }
        }
    }
    let gain_part = tail_integral(gains, &spec.w_plus);
    let loss_part = tail_integral(losses, &spec.w_minus);
    CptValue {
        value: gain_part - loss_part,
        gain_part,
        loss_part,
    }
}
