//! Monte Carlo prospect-value oracle: turns a parametrized outcome family
//! into a `NoisyOracle` whose samples are batch estimates of the functional.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cpt::estimate::cpt_estimate;
use crate::cpt::functional::CptSpec;
use crate::error::Error;
use crate::oracle::NoisyOracle;

/// A family of outcome distributions indexed by a parameter vector: one call
/// draws a single outcome X(theta).
pub trait OutcomeFamily {
    fn sample(&self, theta: &[f64], rng: &mut dyn RngCore) -> Result<f64, Error>;
}

/// Adapts a closure `(theta, rng) -> outcome` into an [`OutcomeFamily`].
pub struct FamilyFn<F>(pub F);

impl<F> OutcomeFamily for FamilyFn<F>
where
    F: Fn(&[f64], &mut dyn RngCore) -> Result<f64, Error>,
{
    fn sample(&self, theta: &[f64], rng: &mut dyn RngCore) -> Result<f64, Error> {
        (self.0)(theta, rng)
    }
}

impl<T: OutcomeFamily + ?Sized> OutcomeFamily for &T {
    fn sample(&self, theta: &[f64], rng: &mut dyn RngCore) -> Result<f64, Error> {
        (**self).sample(theta, rng)
    }
}

/// Estimates the prospect value of X(theta) from `batch` fresh draws per
/// call.
///
/// Each `eval` counts as one oracle call in the evaluation ledger; the inner
/// Monte Carlo draws are tracked separately via
/// [`inner_draws`](CptOracle::inner_draws). Draws consume one owned rng
/// stream, so successive calls use fresh, reproducible randomness.
pub struct CptOracle<F> {
    family: F,
    spec: CptSpec,
    batch: usize,
    rng: ChaCha8Rng,
    calls: u64,
    inner_draws: u64,
    buf: Vec<f64>,
}

impl<F: OutcomeFamily> CptOracle<F> {
    pub fn new(family: F, spec: CptSpec, batch: usize, seed: u64) -> Result<Self, Error> {
        if batch == 0 {
            return Err(Error::invalid("batch", "must be >= 1"));
        }
        Ok(CptOracle {
            family,
            spec,
            batch,
            rng: ChaCha8Rng::seed_from_u64(seed),
            calls: 0,
            inner_draws: 0,
            buf: Vec::with_capacity(batch),
        })
    }

    /// Total Monte Carlo outcome draws across all calls.
    pub fn inner_draws(&self) -> u64 {
        self.inner_draws
    }

    pub fn spec(&self) -> &CptSpec {
        &self.spec
    }

    pub fn batch(&self) -> usize {
        self.batch
    }
}

impl<F: OutcomeFamily> NoisyOracle for CptOracle<F> {
    fn eval(&mut self, theta: &[f64]) -> Result<f64, Error> {
        self.calls += 1;
        self.buf.clear();
        for _ in 0..self.batch {
            let x = self.family.sample(theta, &mut self.rng)?;
            self.inner_draws += 1;
            self.buf.push(x);
        }
        cpt_estimate(&self.buf, &self.spec)
    }

    fn call_count(&self) -> u64 {
        self.calls
    }
}
