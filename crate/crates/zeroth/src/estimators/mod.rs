//! Gradient and Hessian estimators driven purely by noisy function
//! evaluations, with exact measurement budgets: 2N oracle calls for
//! coordinate-wise central differences, 2 for the simultaneous-perturbation
//! gradient, 4 for the simultaneous-perturbation Hessian.

mod gains;
mod gradient;
mod hessian;
mod perturbation;

pub use gains::{GainSchedule, STANDARD_ALPHA, STANDARD_GAMMA};
pub use gradient::{kw_gradient, spsa_gradient, GradientEstimate};
pub use hessian::{regularize_hessian, spsa_hessian, HessianEstimate};
pub use perturbation::{sample_rademacher, Perturbation, PerturbationDist};
