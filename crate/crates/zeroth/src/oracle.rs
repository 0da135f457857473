//! Noisy zeroth-order oracles: the only access the estimators have to an
//! objective is drawing one noisy scalar sample per call.

use crate::error::Error;

/// A callable producing one noisy scalar sample of the objective per call,
/// with built-in evaluation counting.
///
/// Every invocation of [`eval`](NoisyOracle::eval) increments
/// [`call_count`](NoisyOracle::call_count) by exactly one, including calls
/// that end in an error. The oracle owns whatever randomness its noise needs,
/// so identical seeding reproduces identical sample streams.
pub trait NoisyOracle {
    /// Draw one noisy sample of the objective at `theta`.
    fn eval(&mut self, theta: &[f64]) -> Result<f64, Error>;

    /// Total number of `eval` invocations so far.
    fn call_count(&self) -> u64;
}

/// Wraps a plain closure as a counting oracle.
pub struct FnOracle<F> {
    f: F,
    calls: u64,
}

impl<F: FnMut(&[f64]) -> f64> FnOracle<F> {
    pub fn new(f: F) -> Self {
        FnOracle { f, calls: 0 }
    }
}

impl<F: FnMut(&[f64]) -> f64> NoisyOracle for FnOracle<F> {
    fn eval(&mut self, theta: &[f64]) -> Result<f64, Error> {
        self.calls += 1;
        Ok((self.f)(theta))
    }

    fn call_count(&self) -> u64 {
        self.calls
    }
}

/// Derives an independent stream seed from a base seed (SplitMix64 finalizer).
///
/// Used to split one run seed into decorrelated ChaCha streams: stream 0 drives
/// perturbation sampling, stream 1 inner Monte Carlo draws, stream 2 problem
/// noise. Pure function of its inputs, so runs stay reproducible.
pub fn derive_seed(base: u64, stream: u64) -> u64 {
    let mut z = base ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
