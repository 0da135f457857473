//! Sample-based estimation of the prospect functional from order statistics.

use crate::cpt::functional::CptSpec;
use crate::error::Error;

/// Compensated (Kahan) accumulator; keeps long weighted sums near working
/// precision.
#[derive(Default)]
struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum
    }
}

/// Estimates the prospect functional from i.i.d. samples by weighting order
/// statistics with empirical tail-probability increments.
///
/// With samples sorted ascending x_(1) <= ... <= x_(n), gains g_i =
/// u+((x_(i)-b)_+) and losses l_i = u-((x_(i)-b)_-), the estimate is
///
/// ```text
/// sum_i g_i [w+((n+1-i)/n) - w+((n-i)/n)] - sum_i l_i [w-(i/n) - w-((i-1)/n)]
/// ```
///
/// evaluated in summation-by-parts form (identical algebraically, and exact
/// when all samples coincide). Ties are kept as-is; no de-duplication.
/// Under identity utilities and weightings this telescopes to
/// (sample mean - b).
pub fn cpt_estimate(samples: &[f64], spec: &CptSpec) -> Result<f64, Error> {
    if samples.is_empty() {
        return Err(Error::invalid("samples", "need at least one sample"));
    }
    if let Some(bad) = samples.iter().find(|x| !x.is_finite()) {
        return Err(Error::invalid(
            "samples",
            format!("non-finite sample {bad}"),
        ));
    }
    let n = samples.len();
    let nf = n as f64;
    let mut xs = samples.to_vec();
    xs.sort_by(f64::total_cmp);

    // Gain side, summation by parts over non-decreasing g_i:
    // g_1 + sum_{i=2..n} (g_i - g_{i-1}) w+((n+1-i)/n).
    let gain_at = |i: usize| {
        let v = xs[i - 1] - spec.reference;
        if v > 0.0 {
            spec.u_plus.eval_unchecked(v)
        } else {
            0.0
        }
    };
    let mut gain = KahanSum::default();
    let mut prev = gain_at(1);
    gain.add(prev);
    for i in 2..=n {
        let g = gain_at(i);
        let dg = g - prev;
        if dg != 0.0 {
            gain.add(dg * spec.w_plus.eval_unchecked((n + 1 - i) as f64 / nf));
        }
        prev = g;
    }

    // Loss side over non-increasing l_i:
    // l_n + sum_{i=1..n-1} (l_i - l_{i+1}) w-(i/n).
    let loss_at = |i: usize| {
        let v = xs[i - 1] - spec.reference;
        if v < 0.0 {
            spec.u_minus.eval_unchecked(-v)
        } else {
            0.0
        }
    };
    let mut loss = KahanSum::default();
    loss.add(loss_at(n));
    let mut next = loss_at(n);
    for i in (1..n).rev() {
        let l = loss_at(i);
        let dl = l - next;
        if dl != 0.0 {
            loss.add(dl * spec.w_minus.eval_unchecked(i as f64 / nf));
        }
        next = l;
    }

    Ok(gain.value() - loss.value())
}
