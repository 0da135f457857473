//! Rank-dependent prospect valuation of random outcomes: utilities on gains
//! and losses relative to a reference point, probability weightings on tail
//! probabilities, exact evaluation on finite discrete distributions, and a
//! sample-based estimator with its Monte Carlo oracle.

mod distribution;
mod estimate;
mod functional;
mod oracle;
mod utility;
mod weighting;

pub use distribution::DiscreteDistribution;
pub use estimate::cpt_estimate;
pub use functional::{cpt_exact_discrete, CptSpec, CptValue};
pub use oracle::{CptOracle, FamilyFn, OutcomeFamily};
pub use utility::UtilityFunction;
pub use weighting::WeightingFunction;
