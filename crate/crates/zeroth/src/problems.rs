//! Built-in benchmark problems with known ground truth: noisy quadratics,
//! noisy Rosenbrock, and a one-parameter Bernoulli outcome family for
//! prospect-value optimization.
//!
//! Each problem carries its noise level, default box, default start, and
//! (where available) the exact optimum and analytic gradient, so tests and
//! benchmarks can measure true progress rather than estimated progress.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::cpt::{DiscreteDistribution, OutcomeFamily};
use crate::error::Error;
use crate::matrix::Matrix;
use crate::optimize::BoxBounds;
use crate::oracle::NoisyOracle;

type ObjectiveFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;
type GradientFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;
type SampleFn = Arc<dyn Fn(&[f64], &mut dyn RngCore) -> Result<f64, Error> + Send + Sync>;
type ExactDistFn = Arc<dyn Fn(&[f64]) -> Result<DiscreteDistribution, Error> + Send + Sync>;

/// A deterministic objective observed through additive Gaussian noise.
pub struct TestProblem {
    name: String,
    dim: usize,
    noise_sigma: f64,
    true_optimum: Option<Vec<f64>>,
    default_bounds: BoxBounds,
    default_start: Vec<f64>,
    objective: ObjectiveFn,
    gradient: Option<GradientFn>,
}

impl fmt::Debug for TestProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestProblem")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("noise_sigma", &self.noise_sigma)
            .finish_non_exhaustive()
    }
}

impl TestProblem {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn noise_sigma(&self) -> f64 {
        self.noise_sigma
    }

    pub fn true_optimum(&self) -> Option<&[f64]> {
        self.true_optimum.as_deref()
    }

    pub fn default_bounds(&self) -> &BoxBounds {
        &self.default_bounds
    }

    pub fn default_start(&self) -> &[f64] {
        &self.default_start
    }

    /// Noise-free objective value.
    pub fn objective_value(&self, theta: &[f64]) -> f64 {
        (self.objective)(theta)
    }

    /// Analytic gradient, where the problem ships one.
    pub fn true_gradient(&self, theta: &[f64]) -> Option<Vec<f64>> {
        self.gradient.as_ref().map(|g| g(theta))
    }

    /// Euclidean distance from `theta` to the known optimum, if any.
    pub fn distance_to_optimum(&self, theta: &[f64]) -> Option<f64> {
        self.true_optimum.as_ref().map(|opt| {
            theta
                .iter()
                .zip(opt)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt()
        })
    }

    /// A fresh noisy view of the objective. Separate seeds give independent
    /// noise streams over the same underlying function.
    pub fn oracle(&self, seed: u64) -> ProblemOracle {
        ProblemOracle {
            objective: Arc::clone(&self.objective),
            sigma: self.noise_sigma,
            rng: ChaCha8Rng::seed_from_u64(seed),
            calls: 0,
        }
    }
}

/// Evaluates a problem objective plus `sigma * N(0, 1)` noise, counting
/// every call. With `sigma == 0` no random draw is consumed, so noise-free
/// runs are independent of the seed.
pub struct ProblemOracle {
    objective: ObjectiveFn,
    sigma: f64,
    rng: ChaCha8Rng,
    calls: u64,
}

impl NoisyOracle for ProblemOracle {
    fn eval(&mut self, theta: &[f64]) -> Result<f64, Error> {
        self.calls += 1;
        let mut y = (self.objective)(theta);
        if self.sigma > 0.0 {
            let z: f64 = self.rng.sample(StandardNormal);
            y += self.sigma * z;
        }
        Ok(y)
    }

    fn call_count(&self) -> u64 {
        self.calls
    }
}

fn validate_sigma(sigma: f64) -> Result<(), Error> {
    if !sigma.is_finite() || sigma < 0.0 {
        return Err(Error::invalid(
            "sigma",
            format!("noise level must be finite and >= 0, got {sigma}"),
        ));
    }
    Ok(())
}

/// Builds the noisy quadratic `f(theta) = theta' A theta + b' theta` for a
/// symmetric positive-definite `A`. The exact minimizer solves
/// `2 A theta = -b`; the default box is `[-5, 5]` per coordinate, widened
/// where needed so the minimizer sits at least 1 unit inside it.
pub fn make_noisy_quadratic(a: Matrix, b: Vec<f64>, sigma: f64) -> Result<TestProblem, Error> {
    let n = a.dim();
    if n == 0 || b.len() != n {
        return Err(Error::invalid(
            "quadratic",
            format!(
                "matrix is {n}x{n} but the linear term has {} entries",
                b.len()
            ),
        ));
    }
    if b.iter().any(|x| !x.is_finite()) || !a.is_finite() {
        return Err(Error::invalid("quadratic", "coefficients must be finite"));
    }
    a.require_symmetric("quadratic.a")?;
    let chol = nalgebra::Cholesky::new(a.to_na())
        .ok_or_else(|| Error::invalid("quadratic.a", "matrix must be positive definite"))?;
    let rhs = nalgebra::DVector::from_iterator(n, b.iter().map(|x| -x / 2.0));
    let optimum: Vec<f64> = chol.solve(&rhs).iter().copied().collect();
    validate_sigma(sigma)?;

    let lo: Vec<f64> = optimum.iter().map(|x| (x - 1.0).min(-5.0)).collect();
    let hi: Vec<f64> = optimum.iter().map(|x| (x + 1.0).max(5.0)).collect();
    let a_obj = a.clone();
    let b_obj = b.clone();
    let a_grad = a;
    let b_grad = b;
    Ok(TestProblem {
        name: format!("quadratic:N={n},sigma={sigma}"),
        dim: n,
        noise_sigma: sigma,
        true_optimum: Some(optimum),
        default_bounds: BoxBounds::new(lo, hi)?,
        default_start: vec![2.0; n],
        objective: Arc::new(move |t: &[f64]| {
            let at = a_obj.mul_vec(t);
            t.iter().zip(&at).map(|(x, y)| x * y).sum::<f64>()
                + b_obj.iter().zip(t).map(|(x, y)| x * y).sum::<f64>()
        }),
        gradient: Some(Arc::new(move |t: &[f64]| {
            let at = a_grad.mul_vec(t);
            at.iter()
                .zip(&b_grad)
                .map(|(ax, bx)| 2.0 * ax + bx)
                .collect()
        })),
    })
}

/// Builds the noisy Rosenbrock function in `dim >= 2` dimensions
/// (minimum 0 at the all-ones point). Default start alternates -1.2 / 1.0;
/// default box is `[-5, 5]` per coordinate.
pub fn make_noisy_rosenbrock(dim: usize, sigma: f64) -> Result<TestProblem, Error> {
    if dim < 2 {
        return Err(Error::invalid(
            "rosenbrock",
            format!("dimension must be >= 2, got {dim}"),
        ));
    }
    validate_sigma(sigma)?;
    let start: Vec<f64> = (0..dim)
        .map(|i| if i % 2 == 0 { -1.2 } else { 1.0 })
        .collect();
    Ok(TestProblem {
        name: format!("rosenbrock:N={dim},sigma={sigma}"),
        dim,
        noise_sigma: sigma,
        true_optimum: Some(vec![1.0; dim]),
        default_bounds: BoxBounds::uniform(dim, -5.0, 5.0)?,
        default_start: start,
        objective: Arc::new(|t: &[f64]| {
            t.windows(2)
                .map(|w| {
                    let d = w[1] - w[0] * w[0];
                    100.0 * d * d + (1.0 - w[0]) * (1.0 - w[0])
                })
                .sum()
        }),
        gradient: Some(Arc::new(|t: &[f64]| {
            let n = t.len();
            let mut g = vec![0.0; n];
            for i in 0..n - 1 {
                let d = t[i + 1] - t[i] * t[i];
                g[i] += -400.0 * t[i] * d - 2.0 * (1.0 - t[i]);
                g[i + 1] += 200.0 * d;
            }
            g
        })),
    })
}

/// A parametric family of scalar outcome distributions for prospect-value
/// optimization: sampling, parameter box, and (where closed-form) the exact
/// distribution at a parameter point.
pub struct CptFamily {
    name: String,
    dim: usize,
    bounds: BoxBounds,
    default_start: Vec<f64>,
    sampler: SampleFn,
    exact: Option<ExactDistFn>,
}

impl fmt::Debug for CptFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CptFamily")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .finish_non_exhaustive()
    }
}

impl CptFamily {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bounds(&self) -> &BoxBounds {
        &self.bounds
    }

    pub fn default_start(&self) -> &[f64] {
        &self.default_start
    }

    /// Exact outcome distribution at `theta`, when the family has one in
    /// closed form.
    pub fn exact_dist_at(&self, theta: &[f64]) -> Result<DiscreteDistribution, Error> {
        match &self.exact {
            Some(f) => f(theta),
            None => Err(Error::invalid(
                "family",
                "no closed-form distribution is available",
            )),
        }
    }
}

impl OutcomeFamily for CptFamily {
    fn sample(&self, theta: &[f64], rng: &mut dyn RngCore) -> Result<f64, Error> {
        (self.sampler)(theta, rng)
    }
}

fn check_bernoulli_theta(theta: &[f64]) -> Result<f64, Error> {
    if theta.len() != 1 {
        return Err(Error::invalid(
            "theta",
            format!("family is one-dimensional, got {} parameters", theta.len()),
        ));
    }
    let t = theta[0];
    if !t.is_finite() || !(0.0..=2.0).contains(&t) {
        return Err(Error::invalid(
            "theta",
            format!("parameter must lie in [0, 2], got {t}"),
        ));
    }
    Ok(t)
}

/// A one-parameter coin: outcome `theta` with probability 1/2,
/// `-theta^2` with probability 1/2, for `theta` in `[0, 2]`. Under identity
/// utilities and weights its prospect value is `theta/2 - theta^2/2`, so the
/// box minimizer sits on the boundary at `theta = 2`. Curved utilities and
/// weights shift the picture, which is what makes it a useful benchmark.
pub fn make_cpt_bernoulli_family() -> CptFamily {
    CptFamily {
        name: "cpt-bernoulli".to_string(),
        dim: 1,
        bounds: BoxBounds::uniform(1, 0.0, 2.0).expect("static bounds are valid"),
        default_start: vec![1.0],
        sampler: Arc::new(|theta: &[f64], rng: &mut dyn RngCore| {
            let t = check_bernoulli_theta(theta)?;
            Ok(if rng.gen::<bool>() { t } else { -t * t })
        }),
        exact: Some(Arc::new(|theta: &[f64]| {
            let t = check_bernoulli_theta(theta)?;
            DiscreteDistribution::two_point(t, 0.5, -t * t)
        })),
    }
}

/// A named benchmark problem: either a noisy objective or an outcome family
/// for prospect-value optimization.
#[derive(Debug)]
pub enum Problem {
    Objective(TestProblem),
    Cpt(CptFamily),
}

impl Problem {
    pub fn name(&self) -> &str {
        match self {
            Problem::Objective(p) => p.name(),
            Problem::Cpt(f) => f.name(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Problem::Objective(p) => p.dim(),
            Problem::Cpt(f) => f.dim(),
        }
    }

    pub fn default_start(&self) -> &[f64] {
        match self {
            Problem::Objective(p) => p.default_start(),
            Problem::Cpt(f) => f.default_start(),
        }
    }

    pub fn default_bounds(&self) -> &BoxBounds {
        match self {
            Problem::Objective(p) => p.default_bounds(),
            Problem::Cpt(f) => f.bounds(),
        }
    }
}

fn parse_params(body: &str) -> Result<Vec<(&str, &str)>, Error> {
    let mut out = Vec::new();
    for piece in body.split(',') {
        let (k, v) = piece.split_once('=').ok_or_else(|| {
            Error::invalid("problem", format!("expected key=value, got '{piece}'"))
        })?;
        out.push((k.trim(), v.trim()));
    }
    Ok(out)
}

fn take_params(body: Option<&str>, allowed: &[&str]) -> Result<Vec<(String, String)>, Error> {
    let Some(body) = body else {
        return Ok(Vec::new());
    };
    let pairs = parse_params(body)?;
    let mut out = Vec::new();
    for (k, v) in pairs {
        if !allowed.contains(&k) {
            return Err(Error::invalid(
                "problem",
                format!("unknown parameter '{k}' (allowed: {})", allowed.join(", ")),
            ));
        }
        if out.iter().any(|(seen, _): &(String, String)| seen == k) {
            return Err(Error::invalid(
                "problem",
                format!("parameter '{k}' given twice"),
            ));
        }
        out.push((k.to_string(), v.to_string()));
    }
    Ok(out)
}

fn lookup<'a>(params: &'a [(String, String)], key: &str) -> Option<&'a str> {
    params
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.as_str())
}

fn parse_dim(params: &[(String, String)]) -> Result<usize, Error> {
    let raw = lookup(params, "N")
        .ok_or_else(|| Error::invalid("problem", "missing required parameter 'N'"))?;
    raw.parse::<usize>().map_err(|_| {
        Error::invalid(
            "problem",
            format!("'N' must be a positive integer, got '{raw}'"),
        )
    })
}

fn parse_sigma(params: &[(String, String)]) -> Result<f64, Error> {
    match lookup(params, "sigma") {
        None => Ok(0.0),
        Some(raw) => raw.parse::<f64>().map_err(|_| {
            Error::invalid("problem", format!("'sigma' must be a number, got '{raw}'"))
        }),
    }
}

impl FromStr for Problem {
    type Err = Error;

    /// Parses the benchmark problem grammar:
    /// `quadratic:N=<dim>[,sigma=<s>]` (the sphere `|theta|^2` plus noise),
    /// `rosenbrock:N=<dim>[,sigma=<s>]`, and `cpt-bernoulli`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let (head, body) = match s.split_once(':') {
            Some((h, b)) => (h.trim(), Some(b)),
            None => (s.trim(), None),
        };
        match head {
            "quadratic" => {
                let params = take_params(body, &["N", "sigma"])?;
                let n = parse_dim(&params)?;
                if n == 0 {
                    return Err(Error::invalid("problem", "'N' must be >= 1"));
                }
                let sigma = parse_sigma(&params)?;
                let p = make_noisy_quadratic(Matrix::identity(n), vec![0.0; n], sigma)?;
                Ok(Problem::Objective(p))
            }
            "rosenbrock" => {
                let params = take_params(body, &["N", "sigma"])?;
                let n = parse_dim(&params)?;
                let sigma = parse_sigma(&params)?;
                Ok(Problem::Objective(make_noisy_rosenbrock(n, sigma)?))
            }
            "cpt-bernoulli" => {
                if body.is_some() {
                    return Err(Error::invalid(
                        "problem",
                        "cpt-bernoulli takes no parameters",
                    ));
                }
                Ok(Problem::Cpt(make_cpt_bernoulli_family()))
            }
            other => Err(Error::invalid(
                "problem",
                format!("unknown problem '{other}' (known: quadratic, rosenbrock, cpt-bernoulli)"),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cpt::{cpt_exact_discrete, CptSpec};
    use approx::assert_abs_diff_eq;

    #[test]
    fn quadratic_optimum_zeroes_the_gradient() {
        let a = Matrix::from_fn(2, |i, j| [[2.0, 0.5], [0.5, 1.0]][i][j]);
        let p = make_noisy_quadratic(a, vec![1.0, -2.0], 0.0).unwrap();
        let opt = p.true_optimum().unwrap().to_vec();
        let g = p.true_gradient(&opt).unwrap();
        for gi in g {
            assert_abs_diff_eq!(gi, 0.0, epsilon = 1e-12);
        }
        let f_opt = p.objective_value(&opt);
        for shift in [[0.1, 0.0], [0.0, -0.1], [0.05, 0.05]] {
            let probe: Vec<f64> = opt.iter().zip(shift).map(|(o, s)| o + s).collect();
            assert!(p.objective_value(&probe) > f_opt);
        }
        assert!(p.default_bounds().contains(&opt));
        assert!(p.default_bounds().contains(p.default_start()));
    }

    #[test]
    fn quadratic_box_grows_to_cover_a_far_optimum() {
        // Minimizer of t^2 + b t is -b/2 = 8, outside the default [-5, 5].
        let p = make_noisy_quadratic(Matrix::identity(1), vec![-16.0], 0.0).unwrap();
        assert_abs_diff_eq!(p.true_optimum().unwrap()[0], 8.0, epsilon = 1e-12);
        assert!(p.default_bounds().contains(&[8.0]));
        assert!(p.default_bounds().upper()[0] >= 9.0);
    }

    #[test]
    fn quadratic_rejects_bad_inputs() {
        let asym = Matrix::from_fn(2, |i, j| if (i, j) == (0, 1) { 1.0 } else { 0.0 });
        assert!(make_noisy_quadratic(asym, vec![0.0, 0.0], 0.0).is_err());
        let indefinite = Matrix::diagonal(&[1.0, -1.0]);
        assert!(make_noisy_quadratic(indefinite, vec![0.0, 0.0], 0.0).is_err());
        assert!(make_noisy_quadratic(Matrix::identity(2), vec![0.0], 0.0).is_err());
        assert!(make_noisy_quadratic(Matrix::identity(1), vec![0.0], -0.1).is_err());
        assert!(make_noisy_quadratic(Matrix::identity(1), vec![f64::NAN], 0.0).is_err());
    }

    #[test]
    fn zero_sigma_oracle_is_exact_and_seed_independent() {
        let p = make_noisy_quadratic(Matrix::identity(3), vec![0.0; 3], 0.0).unwrap();
        let theta = [1.0, -2.0, 0.5];
        let mut o1 = p.oracle(1);
        let mut o2 = p.oracle(999);
        let y1 = o1.eval(&theta).unwrap();
        let y2 = o2.eval(&theta).unwrap();
        assert_eq!(y1, p.objective_value(&theta));
        assert_eq!(y1, y2);
        assert_eq!(o1.call_count(), 1);
    }

    #[test]
    fn noise_is_unbiased_with_the_declared_variance() {
        let sigma = 0.5;
        let p = make_noisy_quadratic(Matrix::identity(2), vec![0.0; 2], sigma).unwrap();
        let theta = [1.0, 1.0];
        let truth = p.objective_value(&theta);
        let mut oracle = p.oracle(2024);
        let n = 100_000;
        let draws: Vec<f64> = (0..n).map(|_| oracle.eval(&theta).unwrap()).collect();
        let mean = draws.iter().sum::<f64>() / n as f64;
        // 5-sigma band around the true mean.
        assert!(
            (mean - truth).abs() < 5.0 * sigma / (n as f64).sqrt(),
            "sample mean {mean} vs truth {truth}"
        );
        let var = draws.iter().map(|d| (d - mean) * (d - mean)).sum::<f64>() / (n - 1) as f64;
        assert!(
            (var - sigma * sigma).abs() < 0.2 * sigma * sigma,
            "sample variance {var} vs {}",
            sigma * sigma
        );
        assert_eq!(oracle.call_count(), n as u64);
    }

    #[test]
    fn oracle_noise_is_reproducible_per_seed() {
        let p = make_noisy_quadratic(Matrix::identity(1), vec![0.0], 1.0).unwrap();
        let seq = |seed: u64| -> Vec<f64> {
            let mut o = p.oracle(seed);
            (0..20).map(|_| o.eval(&[0.0]).unwrap()).collect()
        };
        assert_eq!(seq(7), seq(7));
        assert_ne!(seq(7), seq(8));
    }

    #[test]
    fn rosenbrock_ground_truth() {
        let p = make_noisy_rosenbrock(4, 0.0).unwrap();
        let ones = vec![1.0; 4];
        assert_eq!(p.objective_value(&ones), 0.0);
        assert_eq!(p.true_gradient(&ones).unwrap(), vec![0.0; 4]);
        assert_eq!(p.default_start(), &[-1.2, 1.0, -1.2, 1.0]);
        assert_eq!(p.distance_to_optimum(&ones), Some(0.0));
        assert!(make_noisy_rosenbrock(1, 0.0).is_err());
    }

    #[test]
    fn rosenbrock_gradient_matches_central_differences() {
        let p = make_noisy_rosenbrock(5, 0.0).unwrap();
        let theta = [0.3, -0.7, 1.4, 0.1, -1.8];
        let g = p.true_gradient(&theta).unwrap();
        let h = 1e-6;
        for i in 0..5 {
            let mut up = theta.to_vec();
            let mut dn = theta.to_vec();
            up[i] += h;
            dn[i] -= h;
            let fd = (p.objective_value(&up) - p.objective_value(&dn)) / (2.0 * h);
            assert!(
                (fd - g[i]).abs() <= 1e-4 * (1.0 + g[i].abs()),
                "coordinate {i}: finite difference {fd} vs analytic {}",
                g[i]
            );
        }
    }

    #[test]
    fn bernoulli_family_matches_its_closed_form() {
        let fam = make_cpt_bernoulli_family();
        let theta = [1.5];
        let dist = fam.exact_dist_at(&theta).unwrap();
        assert_abs_diff_eq!(dist.mean(), 0.5 * 1.5 - 0.5 * 2.25, epsilon = 1e-15);

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut ups = 0u32;
        let n = 10_000;
        for _ in 0..n {
            let x = fam.sample(&theta, &mut rng).unwrap();
            assert!(x == 1.5 || x == -2.25, "unexpected outcome {x}");
            if x == 1.5 {
                ups += 1;
            }
        }
        let freq = f64::from(ups) / f64::from(n);
        assert!((freq - 0.5).abs() < 0.02, "up frequency {freq}");
    }

    #[test]
    fn bernoulli_identity_value_is_half_theta_minus_half_theta_squared() {
        let fam = make_cpt_bernoulli_family();
        let spec = CptSpec::identity(0.0);
        for t in [0.0, 0.3, 1.0, 1.7, 2.0] {
            let dist = fam.exact_dist_at(&[t]).unwrap();
            let v = cpt_exact_discrete(&dist, &spec).value;
            assert_abs_diff_eq!(v, 0.5 * t - 0.5 * t * t, epsilon = 1e-12);
        }
        // Identity minimum over the [0, 2] box sits on the upper boundary.
        let at_two = cpt_exact_discrete(&fam.exact_dist_at(&[2.0]).unwrap(), &spec).value;
        assert_abs_diff_eq!(at_two, -1.0, epsilon = 1e-12);
    }

    #[test]
    fn bernoulli_family_rejects_out_of_box_parameters() {
        let fam = make_cpt_bernoulli_family();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for bad in [[-0.1], [2.1], [f64::NAN]] {
            assert!(fam.sample(&bad, &mut rng).is_err());
            assert!(fam.exact_dist_at(&bad).is_err());
        }
        assert!(fam.sample(&[1.0, 1.0], &mut rng).is_err());
    }

    #[test]
    fn problem_grammar_round_trips_known_names() {
        let p: Problem = "quadratic:N=10,sigma=0.1".parse().unwrap();
        assert_eq!(p.name(), "quadratic:N=10,sigma=0.1");
        assert_eq!(p.dim(), 10);
        match &p {
            Problem::Objective(q) => {
                assert_eq!(q.noise_sigma(), 0.1);
                assert_eq!(q.true_optimum().unwrap(), &[0.0; 10]);
            }
            Problem::Cpt(_) => panic!("expected an objective problem"),
        }

        let p: Problem = "rosenbrock:N=2,sigma=0.01".parse().unwrap();
        assert_eq!(p.name(), "rosenbrock:N=2,sigma=0.01");

        let p: Problem = "cpt-bernoulli".parse().unwrap();
        assert_eq!(p.name(), "cpt-bernoulli");
        assert_eq!(p.dim(), 1);
        assert_eq!(p.default_start(), &[1.0]);
    }

    #[test]
    fn problem_grammar_defaults_sigma_to_zero() {
        let p: Problem = "quadratic:N=3".parse().unwrap();
        match p {
            Problem::Objective(q) => assert_eq!(q.noise_sigma(), 0.0),
            Problem::Cpt(_) => panic!("expected an objective problem"),
        }
    }

    #[test]
    fn problem_grammar_rejects_malformed_specs() {
        for bad in [
            "quadratic",
            "quadratic:sigma=0.1",
            "quadratic:N=0",
            "quadratic:N=-3",
            "quadratic:N=2,rho=1",
            "quadratic:N=2,N=3",
            "quadratic:N=two",
            "rosenbrock:N=1",
            "cpt-bernoulli:N=1",
            "banana:N=2",
            "quadratic:N",
        ] {
            assert!(
                bad.parse::<Problem>().is_err(),
                "'{bad}' should be rejected"
            );
        }
    }
}
