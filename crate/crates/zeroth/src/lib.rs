//! Derivative-free stochastic optimization from noisy function evaluations.
//!
//! The crate is organized around a strict evaluation ledger: every estimator
//! states exactly how many oracle calls it makes, every oracle counts its
//! own calls, and every optimizer trace records the cumulative count, so
//! benchmark comparisons can be made per evaluation rather than per
//! iteration.
//!
//! - [`estimators`]: simultaneous-perturbation and coordinate-wise gradient
//!   estimates, a four-measurement Hessian estimate, gain schedules, and
//!   Rademacher perturbations.
//! - [`cpt`]: cumulative prospect theory value computation (exact for
//!   discrete distributions), a quantile-based statistical estimator, and a
//!   Monte Carlo oracle over parametrized outcome families.
//! - [`optimize`]: projected descent drivers built on the estimators, with
//!   reproducible traces.
//! - [`problems`]: benchmark problems with known ground truth.
//!
//! Everything that draws randomness takes an explicit `u64` seed and uses a
//! counter-based generator, so identical inputs reproduce runs bit for bit
//! across platforms.
//!
//! # Example
//!
//! Minimize a noise-free quadratic with two evaluations per iteration:
//!
//! ```
//! use zeroth::estimators::GainSchedule;
//! use zeroth::optimize::{spsa_descend, OptimizerConfig};
//! use zeroth::FnOracle;
//!
//! let schedule = GainSchedule::standard(0.5, 0.2, 300)?;
//! let config = OptimizerConfig::new(schedule, 300, 7);
//! let mut oracle = FnOracle::new(|t: &[f64]| (t[0] - 1.0).powi(2) + t[1].powi(2));
//! let trace = spsa_descend(&mut oracle, &[3.0, -2.0], &config)?;
//!
//! assert_eq!(trace.final_record().cumulative_evals, 600);
//! let dist = ((trace.final_theta[0] - 1.0).powi(2) + trace.final_theta[1].powi(2)).sqrt();
//! assert!(dist < 0.1);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod cpt;
mod error;
pub mod estimators;
mod matrix;
pub mod optimize;
mod oracle;
pub mod problems;

pub use error::Error;
pub use matrix::Matrix;
pub use oracle::{derive_seed, FnOracle, NoisyOracle};

// Each module's docs are one chapter of the guide under book/src, so the
// book's code blocks run as doc-tests and cannot drift from the crate.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/gradient-estimation.md")]
    mod gradient_estimation {}
    #[doc = include_str!("../../../book/src/gain-schedules.md")]
    mod gain_schedules {}
    #[doc = include_str!("../../../book/src/second-order.md")]
    mod second_order {}
    #[doc = include_str!("../../../book/src/prospect-theory.md")]
    mod prospect_theory {}
    #[doc = include_str!("../../../book/src/cpt-optimization.md")]
    mod cpt_optimization {}
}
