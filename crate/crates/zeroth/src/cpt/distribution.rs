//! Finite discrete probability distributions.

use rand::Rng;

use crate::error::Error;

/// Probability-sum slack tolerated at construction.
const PROB_SUM_TOL: f64 = 1e-12;

/// A finite discrete distribution given by outcomes and their probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    outcomes: Vec<f64>,
    probabilities: Vec<f64>,
}

impl DiscreteDistribution {
    /// Validates outcomes (finite) and probabilities (non-negative, summing
    /// to 1 within 1e-12) and builds the distribution.
    pub fn new(outcomes: Vec<f64>, probabilities: Vec<f64>) -> Result<Self, Error> {
        if outcomes.is_empty() {
            return Err(Error::invalid("outcomes", "need at least one outcome"));
        }
        if outcomes.len() != probabilities.len() {
            return Err(Error::invalid(
                "probabilities",
                format!(
                    "length {} does not match outcomes length {}",
                    probabilities.len(),
                    outcomes.len()
                ),
            ));
        }
        if let Some(bad) = outcomes.iter().find(|x| !x.is_finite()) {
            return Err(Error::invalid(
                "outcomes",
                format!("non-finite outcome {bad}"),
            ));
        }
        if let Some(bad) = probabilities.iter().find(|p| !p.is_finite() || **p < 0.0) {
            return Err(Error::invalid(
                "probabilities",
                format!("probabilities must be finite and >= 0, got {bad}"),
            ));
        }
        let total: f64 = probabilities.iter().sum();
        if (total - 1.0).abs() > PROB_SUM_TOL {
            return Err(Error::invalid(
                "probabilities",
                format!("must sum to 1 within {PROB_SUM_TOL:e}, got {total}"),
            ));
        }
        Ok(DiscreteDistribution {
            outcomes,
            probabilities,
        })
    }

    /// Equal-probability distribution over the given outcomes.
    pub fn uniform(outcomes: Vec<f64>) -> Result<Self, Error> {
        let n = outcomes.len();
        if n == 0 {
            return Err(Error::invalid("outcomes", "need at least one outcome"));
        }
        let p = 1.0 / n as f64;
        let mut probabilities = vec![p; n];
        // Absorb rounding into the last mass so the sum is exactly 1.
        let partial: f64 = probabilities[..n - 1].iter().sum();
        probabilities[n - 1] = 1.0 - partial;
        DiscreteDistribution::new(outcomes, probabilities)
    }

    /// Two-point distribution taking `x` with probability `p` and `y` otherwise.
    pub fn two_point(x: f64, p: f64, y: f64) -> Result<Self, Error> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::invalid("p", format!("must lie in [0, 1], got {p}")));
        }
        DiscreteDistribution::new(vec![x, y], vec![p, 1.0 - p])
    }

    pub fn outcomes(&self) -> &[f64] {
        &self.outcomes
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn mean(&self) -> f64 {
        self.outcomes
            .iter()
            .zip(&self.probabilities)
            .map(|(x, p)| x * p)
            .sum()
    }

    /// Draws one outcome by inverse-CDF walk.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let u: f64 = rng.gen();
        let mut acc = 0.0;
        for (x, p) in self.outcomes.iter().zip(&self.probabilities) {
            acc += p;
            if u < acc {
                return *x;
            }
        }
        *self.outcomes.last().expect("non-empty by construction")
    }
}
