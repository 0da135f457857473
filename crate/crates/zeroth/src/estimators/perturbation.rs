//! Simultaneous-perturbation direction vectors.
//!
//! The simultaneous-perturbation estimators divide by the perturbation
//! components, so a usable distribution must have finite inverse moments.
//! Symmetric Bernoulli (Rademacher) signs, +-1 with probability 1/2 each,
//! satisfy this and are the only distribution shipped. Distributions with
//! mass arbitrarily close to zero, like uniform or normal, are rejected at
//! the door.

use rand::Rng;

use crate::error::Error;

/// A perturbation direction with every component exactly +1 or -1.
#[derive(Debug, Clone, PartialEq)]
pub struct Perturbation {
    signs: Vec<f64>,
}

impl Perturbation {
    /// Builds a perturbation from explicit signs; every entry must be +-1.
    pub fn new(signs: Vec<f64>) -> Result<Self, Error> {
        if signs.is_empty() {
            return Err(Error::invalid("perturbation", "dimension must be >= 1"));
        }
        if let Some(bad) = signs.iter().find(|s| s.abs() != 1.0) {
            return Err(Error::invalid(
                "perturbation",
                format!("components must be +1 or -1, got {bad}"),
            ));
        }
        Ok(Perturbation { signs })
    }

    pub fn values(&self) -> &[f64] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Enumerates all 2^n sign vectors of dimension `n`, in bit order
    /// (bit i of the counter set means component i is -1).
    ///
    /// Intended for exact expectation checks in low dimension; panics if the
    /// enumeration would be astronomically large.
    pub fn enumerate(n: usize) -> impl Iterator<Item = Perturbation> {
        assert!((1..=24).contains(&n), "enumeration is meant for small n");
        (0u64..(1u64 << n)).map(move |bits| Perturbation {
            signs: (0..n)
                .map(|i| if bits >> i & 1 == 1 { -1.0 } else { 1.0 })
                .collect(),
        })
    }
}

/// Draws a Rademacher perturbation: each component +-1 with probability 1/2.
pub fn sample_rademacher<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Perturbation, Error> {
    if n == 0 {
        return Err(Error::invalid("perturbation", "dimension must be >= 1"));
    }
    Ok(Perturbation {
        signs: (0..n)
            .map(|_| if rng.gen::<bool>() { 1.0 } else { -1.0 })
            .collect(),
    })
}

/// Validated perturbation distribution choices.
///
/// Only Rademacher ships; the constructor is the hook that keeps invalid
/// distributions (unbounded inverse moments) out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerturbationDist {
    Rademacher,
}

impl PerturbationDist {
    /// Parses a distribution tag, rejecting known-bad ones with an
    /// explanation rather than a generic unknown-tag error.
    pub fn from_tag(tag: &str) -> Result<Self, Error> {
        match tag {
            "rademacher" => Ok(PerturbationDist::Rademacher),
            "uniform" | "normal" => Err(Error::UnsupportedPerturbation {
                tag: tag.to_string(),
                reason: "mass near zero makes inverse moments unbounded; use rademacher".into(),
            }),
            other => Err(Error::invalid(
                "perturbation distribution",
                format!("unknown tag {other:?}"),
            )),
        }
    }

    /// Draws one perturbation of dimension `n`.
    pub fn sample<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<Perturbation, Error> {
        match self {
            PerturbationDist::Rademacher => sample_rademacher(n, rng),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_have_unit_components() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = sample_rademacher(3, &mut rng).unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.values().iter().all(|s| s.abs() == 1.0));
    }

    #[test]
    fn sampling_is_reproducible_per_seed() {
        let mut a = ChaCha8Rng::seed_from_u64(99);
        let mut b = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50 {
            assert_eq!(
                sample_rademacher(8, &mut a).unwrap(),
                sample_rademacher(8, &mut b).unwrap()
            );
        }
    }

    #[test]
    fn empirical_mean_is_near_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(123);
        let draws = 10_000;
        let mean: f64 = (0..draws)
            .map(|_| sample_rademacher(1, &mut rng).unwrap().values()[0])
            .sum::<f64>()
            / draws as f64;
        assert!(mean.abs() < 0.05, "empirical mean {mean} too far from 0");
    }

    #[test]
    fn zero_dimension_is_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(sample_rademacher(0, &mut rng).is_err());
        assert!(Perturbation::new(vec![]).is_err());
    }

    #[test]
    fn explicit_signs_are_validated() {
        assert!(Perturbation::new(vec![1.0, -1.0, 1.0]).is_ok());
        assert!(Perturbation::new(vec![1.0, 0.5]).is_err());
        assert!(Perturbation::new(vec![1.0, 0.0]).is_err());
        assert!(Perturbation::new(vec![f64::NAN]).is_err());
    }

    #[test]
    fn tag_validation_rejects_unbounded_inverse_moments() {
        assert_eq!(
            PerturbationDist::from_tag("rademacher").unwrap(),
            PerturbationDist::Rademacher
        );
        let uniform = PerturbationDist::from_tag("uniform").unwrap_err();
        assert!(matches!(uniform, Error::UnsupportedPerturbation { .. }));
        let normal = PerturbationDist::from_tag("normal").unwrap_err();
        assert!(matches!(normal, Error::UnsupportedPerturbation { .. }));
        assert!(matches!(
            PerturbationDist::from_tag("cauchy").unwrap_err(),
            Error::InvalidParam { .. }
        ));
    }

    #[test]
    fn enumeration_covers_all_sign_vectors_once() {
        let all: Vec<_> = Perturbation::enumerate(3).collect();
        assert_eq!(all.len(), 8);
        for p in &all {
            assert_eq!(p.len(), 3);
        }
        for i in 0..all.len() {
            for j in (i + 1)..all.len() {
                assert_ne!(all[i], all[j]);
            }
        }
    }
}
