//! Benchmark run configuration: a flat `key = value` text format with
//! dotted section prefixes (`gains.alpha`), full validation with errors that
//! name the offending key, and a renderer whose output parses back to an
//! equal configuration.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use zeroth::cpt::{UtilityFunction, WeightingFunction};
use zeroth::estimators::{GainSchedule, STANDARD_ALPHA, STANDARD_GAMMA};
use zeroth::problems::Problem;
use zeroth::Error as ZerothError;

/// Configuration rejection, always naming the key at fault.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("unknown key '{key}'")]
    UnknownKey { key: String },
    #[error("missing required key '{key}'")]
    MissingKey { key: &'static str },
    #[error("invalid value for '{key}': {reason}")]
    InvalidValue { key: String, reason: String },
    #[error("malformed line '{line}': expected 'key = value'")]
    MalformedLine { line: String },
}

fn invalid(key: impl Into<String>, reason: impl Into<String>) -> ConfigError {
    ConfigError::InvalidValue {
        key: key.into(),
        reason: reason.into(),
    }
}

/// The optimization algorithm to benchmark.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Kw,
    Spsa,
    TwoSpsa,
    CptSpsa,
}

impl Algorithm {
    /// Oracle evaluations one iteration costs at problem dimension `n`.
    pub fn evals_per_iteration(self, n: usize) -> u64 {
        match self {
            Algorithm::Kw => 2 * n as u64,
            Algorithm::Spsa | Algorithm::CptSpsa => 2,
            Algorithm::TwoSpsa => 4,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Kw => "kw",
            Algorithm::Spsa => "spsa",
            Algorithm::TwoSpsa => "2spsa",
            Algorithm::CptSpsa => "cpt-spsa",
        })
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "kw" => Ok(Algorithm::Kw),
            "spsa" => Ok(Algorithm::Spsa),
            "2spsa" => Ok(Algorithm::TwoSpsa),
            "cpt-spsa" => Ok(Algorithm::CptSpsa),
            other => Err(format!(
                "unknown algorithm '{other}' (known: kw, spsa, 2spsa, cpt-spsa)"
            )),
        }
    }
}

/// Step and perturbation size settings (`gains.*` keys).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gains {
    pub a: f64,
    pub stability: f64,
    pub alpha: f64,
    pub c: f64,
    pub gamma: f64,
}

impl Gains {
    pub fn schedule(&self) -> Result<GainSchedule, ZerothError> {
        GainSchedule::new(self.a, self.stability, self.alpha, self.c, self.gamma)
    }
}

/// Second-order settings (`hessian.*` keys), present exactly for `2spsa`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HessianSettings {
    pub c_tilde: f64,
    pub delta_reg: f64,
    pub blend_warmup: usize,
}

/// Prospect-value settings (`cpt.*` keys), present exactly for `cpt-spsa`.
#[derive(Debug, Clone, PartialEq)]
pub struct CptSettings {
    pub batch: usize,
    pub reference: f64,
    pub u_plus: UtilityFunction,
    pub u_minus: UtilityFunction,
    pub w_plus: WeightingFunction,
    pub w_minus: WeightingFunction,
}

/// A fully validated benchmark run description.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    /// Problem grammar string, e.g. `quadratic:N=10,sigma=0.1`.
    pub problem: String,
    pub algorithm: Algorithm,
    pub iterations: usize,
    pub replications: u64,
    /// Base seed; replication r runs with seed + r.
    pub seed: u64,
    pub gains: Gains,
    pub hessian: Option<HessianSettings>,
    pub cpt: Option<CptSettings>,
    /// Start point override; the problem default applies when absent.
    pub theta0: Option<Vec<f64>>,
    pub out_dir: String,
}

const KNOWN_KEYS: &[&str] = &[
    "problem",
    "algorithm",
    "iterations",
    "replications",
    "seed",
    "out_dir",
    "theta0",
    "gains.a",
    "gains.A",
    "gains.alpha",
    "gains.c",
    "gains.gamma",
    "hessian.c_tilde",
    "hessian.delta_reg",
    "hessian.blend_warmup",
    "cpt.batch",
    "cpt.b",
    "cpt.u_plus",
    "cpt.u_minus",
    "cpt.w_plus",
    "cpt.w_minus",
];

struct KeyMap(BTreeMap<String, String>);

impl KeyMap {
    fn take(&mut self, key: &'static str) -> Option<String> {
        self.0.remove(key)
    }

    fn require(&mut self, key: &'static str) -> Result<String, ConfigError> {
        self.take(key).ok_or(ConfigError::MissingKey { key })
    }

    fn parse_opt<T: FromStr>(
        &mut self,
        key: &'static str,
        what: &str,
    ) -> Result<Option<T>, ConfigError> {
        match self.take(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse::<T>()
                .map(Some)
                .map_err(|_| invalid(key, format!("expected {what}, got '{raw}'"))),
        }
    }

    fn parse_req<T: FromStr>(&mut self, key: &'static str, what: &str) -> Result<T, ConfigError> {
        let raw = self.require(key)?;
        raw.parse::<T>()
            .map_err(|_| invalid(key, format!("expected {what}, got '{raw}'")))
    }
}

fn split_lines(text: &str) -> Result<KeyMap, ConfigError> {
    let mut map = BTreeMap::new();
    for raw_line in text.lines() {
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| ConfigError::MalformedLine {
                line: line.to_string(),
            })?;
        let key = key.trim();
        let value = value.trim();
        if !KNOWN_KEYS.contains(&key) {
            return Err(ConfigError::UnknownKey {
                key: key.to_string(),
            });
        }
        if map.insert(key.to_string(), value.to_string()).is_some() {
            return Err(invalid(key, "key given more than once"));
        }
    }
    Ok(KeyMap(map))
}

fn parse_weighting(map: &mut KeyMap, key: &'static str) -> Result<WeightingFunction, ConfigError> {
    match map.take(key) {
        None => Ok(WeightingFunction::Identity),
        Some(raw) => raw
            .parse::<WeightingFunction>()
            .map_err(|e| invalid(key, e.to_string())),
    }
}

fn parse_utility(map: &mut KeyMap, key: &'static str) -> Result<UtilityFunction, ConfigError> {
    match map.take(key) {
        None => Ok(UtilityFunction::Identity),
        Some(raw) => raw
            .parse::<UtilityFunction>()
            .map_err(|e| invalid(key, e.to_string())),
    }
}

fn reject_section(map: &mut KeyMap, prefix: &str, algorithm: Algorithm) -> Result<(), ConfigError> {
    if let Some((key, _)) = map.0.iter().find(|(k, _)| k.starts_with(prefix)) {
        return Err(invalid(
            key.clone(),
            format!("section does not apply to algorithm {algorithm}"),
        ));
    }
    Ok(())
}

/// Parses and fully validates configuration text. Defaults:
/// `gains.alpha` 0.602, `gains.gamma` 0.101, `gains.A` 0.1 x iterations,
/// `out_dir` "bench_out", start point and box from the problem,
/// `hessian.delta_reg` 1e-4, `hessian.blend_warmup` 0, `cpt.b` 0, and
/// identity utilities/weightings.
pub fn parse_config(text: &str) -> Result<BenchConfig, ConfigError> {
    let mut map = split_lines(text)?;

    let problem_str = map.require("problem")?;
    let problem: Problem = problem_str
        .parse()
        .map_err(|e: ZerothError| invalid("problem", e.to_string()))?;

    let algorithm = map
        .require("algorithm")?
        .parse::<Algorithm>()
        .map_err(|reason| invalid("algorithm", reason))?;

    match (&problem, algorithm) {
        (Problem::Cpt(_), Algorithm::CptSpsa)
        | (Problem::Objective(_), Algorithm::Kw)
        | (Problem::Objective(_), Algorithm::Spsa)
        | (Problem::Objective(_), Algorithm::TwoSpsa) => {}
        (Problem::Cpt(_), _) => {
            return Err(invalid(
                "algorithm",
                format!("problem '{problem_str}' requires algorithm cpt-spsa"),
            ))
        }
        (Problem::Objective(_), Algorithm::CptSpsa) => {
            return Err(invalid(
                "algorithm",
                format!("cpt-spsa requires a prospect-value problem, got '{problem_str}'"),
            ))
        }
    }

    let iterations: usize = map.parse_req("iterations", "a positive integer")?;
    if iterations == 0 {
        return Err(invalid("iterations", "must be >= 1"));
    }
    let replications: u64 = map.parse_req("replications", "a positive integer")?;
    if replications == 0 {
        return Err(invalid("replications", "must be >= 1"));
    }
    let seed: u64 = map.parse_req("seed", "an unsigned 64-bit integer")?;

    let gains = Gains {
        a: map.parse_req("gains.a", "a number")?,
        stability: map
            .parse_opt("gains.A", "a number")?
            .unwrap_or(0.1 * iterations as f64),
        alpha: map
            .parse_opt("gains.alpha", "a number")?
            .unwrap_or(STANDARD_ALPHA),
        c: map.parse_req("gains.c", "a number")?,
        gamma: map
            .parse_opt("gains.gamma", "a number")?
            .unwrap_or(STANDARD_GAMMA),
    };
    gains.schedule().map_err(|e| match e {
        ZerothError::InvalidParam { name, reason } => invalid(name, reason),
        other => invalid("gains.a", other.to_string()),
    })?;

    let hessian = if algorithm == Algorithm::TwoSpsa {
        let c_tilde: f64 = map.parse_req("hessian.c_tilde", "a number")?;
        if !c_tilde.is_finite() || c_tilde <= 0.0 {
            return Err(invalid("hessian.c_tilde", "must be finite and > 0"));
        }
        let delta_reg: f64 = map
            .parse_opt("hessian.delta_reg", "a number")?
            .unwrap_or(1e-4);
        if !delta_reg.is_finite() || delta_reg <= 0.0 {
            return Err(invalid("hessian.delta_reg", "must be finite and > 0"));
        }
        let blend_warmup: usize = map
            .parse_opt("hessian.blend_warmup", "a non-negative integer")?
            .unwrap_or(0);
        Some(HessianSettings {
            c_tilde,
            delta_reg,
            blend_warmup,
        })
    } else {
        reject_section(&mut map, "hessian.", algorithm)?;
        None
    };

    let cpt = if algorithm == Algorithm::CptSpsa {
        let batch: usize = map.parse_req("cpt.batch", "a positive integer")?;
        if batch == 0 {
            return Err(invalid("cpt.batch", "must be >= 1"));
        }
        let reference: f64 = map.parse_opt("cpt.b", "a number")?.unwrap_or(0.0);
        if !reference.is_finite() {
            return Err(invalid("cpt.b", "must be finite"));
        }
        Some(CptSettings {
            batch,
            reference,
            u_plus: parse_utility(&mut map, "cpt.u_plus")?,
            u_minus: parse_utility(&mut map, "cpt.u_minus")?,
            w_plus: parse_weighting(&mut map, "cpt.w_plus")?,
            w_minus: parse_weighting(&mut map, "cpt.w_minus")?,
        })
    } else {
        reject_section(&mut map, "cpt.", algorithm)?;
        None
    };

    // The driver projects iterates onto a box shrunk by the largest probe
    // offset so every probe stays inside the family's validity interval;
    // that shrunken box must be non-empty.
    if let Problem::Cpt(family) = &problem {
        let b = family.bounds();
        for (lo, hi) in b.lower().iter().zip(b.upper()) {
            if lo + gains.c > hi - gains.c {
                return Err(invalid(
                    "gains.c",
                    format!(
                        "probe offset {} leaves no feasible box inside [{lo}, {hi}]",
                        gains.c
                    ),
                ));
            }
        }
    }

    let theta0 = match map.take("theta0") {
        None => None,
        Some(raw) => {
            let parsed: Result<Vec<f64>, _> =
                raw.split(',').map(|p| p.trim().parse::<f64>()).collect();
            let v = parsed.map_err(|_| {
                invalid(
                    "theta0",
                    format!("expected comma-separated numbers, got '{raw}'"),
                )
            })?;
            if v.len() != problem.dim() {
                return Err(invalid(
                    "theta0",
                    format!(
                        "expected {} components for '{problem_str}', got {}",
                        problem.dim(),
                        v.len()
                    ),
                ));
            }
            if v.iter().any(|x| !x.is_finite()) {
                return Err(invalid("theta0", "components must be finite"));
            }
            Some(v)
        }
    };

    let out_dir = map
        .take("out_dir")
        .unwrap_or_else(|| "bench_out".to_string());

    debug_assert!(map.0.is_empty(), "all known keys consumed");
    Ok(BenchConfig {
        problem: problem_str,
        algorithm,
        iterations,
        replications,
        seed,
        gains,
        hessian,
        cpt,
        theta0,
        out_dir,
    })
}

impl BenchConfig {
    /// Renders the configuration back to the flat text format with all
    /// defaults materialized; parsing the result yields an equal config.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "problem = {}", self.problem);
        let _ = writeln!(s, "algorithm = {}", self.algorithm);
        let _ = writeln!(s, "iterations = {}", self.iterations);
        let _ = writeln!(s, "replications = {}", self.replications);
        let _ = writeln!(s, "seed = {}", self.seed);
        let _ = writeln!(s, "gains.a = {}", self.gains.a);
        let _ = writeln!(s, "gains.A = {}", self.gains.stability);
        let _ = writeln!(s, "gains.alpha = {}", self.gains.alpha);
        let _ = writeln!(s, "gains.c = {}", self.gains.c);
        let _ = writeln!(s, "gains.gamma = {}", self.gains.gamma);
        if let Some(h) = &self.hessian {
            let _ = writeln!(s, "hessian.c_tilde = {}", h.c_tilde);
            let _ = writeln!(s, "hessian.delta_reg = {}", h.delta_reg);
            let _ = writeln!(s, "hessian.blend_warmup = {}", h.blend_warmup);
        }
        if let Some(c) = &self.cpt {
            let _ = writeln!(s, "cpt.batch = {}", c.batch);
            let _ = writeln!(s, "cpt.b = {}", c.reference);
            let _ = writeln!(s, "cpt.u_plus = {}", c.u_plus);
            let _ = writeln!(s, "cpt.u_minus = {}", c.u_minus);
            let _ = writeln!(s, "cpt.w_plus = {}", c.w_plus);
            let _ = writeln!(s, "cpt.w_minus = {}", c.w_minus);
        }
        if let Some(t) = &self.theta0 {
            let joined: Vec<String> = t.iter().map(|x| format!("{x}")).collect();
            let _ = writeln!(s, "theta0 = {}", joined.join(", "));
        }
        let _ = writeln!(s, "out_dir = {}", self.out_dir);
        s
    }
}
