//! Benchmark execution: drives the configured optimizer over independent
//! replications and writes deterministic trace and summary CSV files.
//!
//! Replication `r` runs with seed `config.seed + r`. All file content is a
//! pure function of the configuration: reals are written with enough digits
//! to round-trip exactly, and wall-clock timings are reported to the console
//! only, never written to disk.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use zeroth::cpt::CptSpec;
use zeroth::optimize::{
    cpt_spsa_optimize, kw_descend, newton_2spsa, spsa_descend, BoxBounds, HessianConfig,
    OptimizeError, OptimizerConfig, RunTrace,
};
use zeroth::problems::{CptFamily, Problem, TestProblem};
use zeroth::{derive_seed, Error as ZerothError};

use crate::config::{Algorithm, BenchConfig};

/// Stream index for a problem oracle's noise draws, keeping them independent
/// of the driver's perturbation draws under the same base seed.
const NOISE_STREAM: u64 = 2;

/// One replication's end state, as written to `summary.csv`.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub replication: u64,
    /// Distance to the known optimum, when the problem has one.
    pub final_dist_to_opt: Option<f64>,
    /// Mean probe value at the last iteration.
    pub final_obj_est: Option<f64>,
    pub total_evals: u64,
}

/// Everything a benchmark run produced.
#[derive(Debug)]
pub struct BenchReport {
    pub out_dir: PathBuf,
    /// Successful replications, in replication order.
    pub rows: Vec<SummaryRow>,
    /// Failed replications as (replication, diagnostic).
    pub failures: Vec<(u64, String)>,
    /// Console-only timings as (replication, seconds); never written to files.
    pub wall_seconds: Vec<(u64, f64)>,
}

/// Benchmark failure outside any single replication.
#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("configuration rejected: {0}")]
    InvalidConfig(String),
}

fn shrink_by_probe_offset(bounds: &BoxBounds, c: f64) -> Result<BoxBounds, RunError> {
    let lo: Vec<f64> = bounds.lower().iter().map(|l| l + c).collect();
    let hi: Vec<f64> = bounds.upper().iter().map(|h| h - c).collect();
    BoxBounds::new(lo, hi).map_err(|e| RunError::InvalidConfig(e.to_string()))
}

enum Target {
    Objective(TestProblem),
    Family(CptFamily),
}

fn drive_objective(
    problem: &TestProblem,
    theta0: &[f64],
    cfg: &BenchConfig,
    opt: OptimizerConfig,
    seed_r: u64,
) -> Result<RunTrace, OptimizeError> {
    let mut oracle = problem.oracle(derive_seed(seed_r, NOISE_STREAM));
    match cfg.algorithm {
        Algorithm::Kw => kw_descend(&mut oracle, theta0, &opt),
        Algorithm::Spsa => spsa_descend(&mut oracle, theta0, &opt),
        Algorithm::TwoSpsa => newton_2spsa(&mut oracle, theta0, &opt),
        Algorithm::CptSpsa => unreachable!("validated: cpt-spsa pairs with a family"),
    }
}

fn drive_family(
    family: &CptFamily,
    theta0: &[f64],
    cfg: &BenchConfig,
    opt: OptimizerConfig,
) -> Result<RunTrace, OptimizeError> {
    let settings = cfg
        .cpt
        .as_ref()
        .expect("validated: cpt-spsa carries settings");
    let spec = CptSpec {
        reference: settings.reference,
        u_plus: settings.u_plus,
        u_minus: settings.u_minus,
        w_plus: settings.w_plus,
        w_minus: settings.w_minus,
    };
    cpt_spsa_optimize(family, theta0, &spec, &opt)
}

/// Runs every replication of a validated configuration, writing
/// `trace_<r>.csv` per replication (partial on abort) and `summary.csv`
/// over the successful ones.
pub fn run_benchmark(cfg: &BenchConfig) -> Result<BenchReport, RunError> {
    let problem: Problem = cfg
        .problem
        .parse()
        .map_err(|e: ZerothError| RunError::InvalidConfig(e.to_string()))?;
    let schedule = cfg
        .gains
        .schedule()
        .map_err(|e| RunError::InvalidConfig(e.to_string()))?;

    let out_dir = PathBuf::from(&cfg.out_dir);
    fs::create_dir_all(&out_dir).map_err(|source| RunError::Io {
        path: out_dir.clone(),
        source,
    })?;

    let (target, bounds) = match problem {
        Problem::Objective(p) => {
            let b = p.default_bounds().clone();
            (Target::Objective(p), b)
        }
        Problem::Cpt(f) => {
            // Shrink the family box by the largest probe offset (c_n <= c)
            // so every probe point stays inside the family's validity box.
            let b = shrink_by_probe_offset(f.bounds(), cfg.gains.c)?;
            (Target::Family(f), b)
        }
    };
    let theta0: Vec<f64> = match &cfg.theta0 {
        Some(t) => t.clone(),
        None => match &target {
            Target::Objective(p) => p.default_start().to_vec(),
            Target::Family(f) => f.default_start().to_vec(),
        },
    };

    let mut report = BenchReport {
        out_dir: out_dir.clone(),
        rows: Vec::new(),
        failures: Vec::new(),
        wall_seconds: Vec::new(),
    };

    for r in 0..cfg.replications {
        let seed_r = cfg.seed.wrapping_add(r);
        let mut opt =
            OptimizerConfig::new(schedule, cfg.iterations, seed_r).with_bounds(bounds.clone());
        if let Some(h) = &cfg.hessian {
            let mut hc = HessianConfig::new(h.c_tilde);
            hc.delta_reg = h.delta_reg;
            hc.blend_warmup = h.blend_warmup;
            opt = opt.with_hessian(hc);
        }
        if let Some(c) = &cfg.cpt {
            opt = opt.with_cpt_batch(c.batch);
        }

        let started = Instant::now();
        let outcome = match &target {
            Target::Objective(p) => drive_objective(p, &theta0, cfg, opt, seed_r),
            Target::Family(f) => drive_family(f, &theta0, cfg, opt),
        };
        report
            .wall_seconds
            .push((r, started.elapsed().as_secs_f64()));

        let trace_path = out_dir.join(format!("trace_{r}.csv"));
        match outcome {
            Ok(trace) => {
                write_trace_csv(&trace_path, &trace, &target)?;
                report.rows.push(summarize(r, &trace, &target));
            }
            Err(OptimizeError::Aborted {
                iteration,
                source,
                partial,
            }) => {
                write_trace_csv(&trace_path, &partial, &target)?;
                report
                    .failures
                    .push((r, format!("aborted at iteration {iteration}: {source}")));
            }
            Err(OptimizeError::Config(e)) => {
                report.failures.push((r, e.to_string()));
            }
        }
    }

    write_summary_csv(&out_dir.join("summary.csv"), &report.rows)?;
    Ok(report)
}

fn summarize(replication: u64, trace: &RunTrace, target: &Target) -> SummaryRow {
    let last = trace.final_record();
    let final_dist_to_opt = match target {
        Target::Objective(p) => p.distance_to_optimum(&trace.final_theta),
        Target::Family(_) => None,
    };
    SummaryRow {
        replication,
        final_dist_to_opt,
        final_obj_est: last.objective_estimate,
        total_evals: last.cumulative_evals,
    }
}

/// Writes a real with 17 significant digits, enough for exact f64 round-trip.
fn push_real(line: &mut String, x: f64) {
    let _ = write!(line, "{x:.16e}");
}

fn push_opt_real(line: &mut String, x: Option<f64>) {
    if let Some(x) = x {
        push_real(line, x);
    }
}

fn write_trace_csv(path: &Path, trace: &RunTrace, target: &Target) -> Result<(), RunError> {
    let dim = trace.final_theta.len();
    let mut s = String::new();
    s.push_str("iter,evals,obj_est,step_norm");
    for i in 0..dim {
        let _ = write!(s, ",theta_{i}");
    }
    s.push_str(",dist_to_opt\n");

    for rec in &trace.records {
        let _ = write!(s, "{},{},", rec.iteration, rec.cumulative_evals);
        push_opt_real(&mut s, rec.objective_estimate);
        s.push(',');
        push_real(&mut s, rec.step_norm);
        for x in &rec.theta {
            s.push(',');
            push_real(&mut s, *x);
        }
        s.push(',');
        let dist = match target {
            Target::Objective(p) => p.distance_to_optimum(&rec.theta),
            Target::Family(_) => None,
        };
        push_opt_real(&mut s, dist);
        s.push('\n');
    }

    fs::write(path, s).map_err(|source| RunError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_summary_csv(path: &Path, rows: &[SummaryRow]) -> Result<(), RunError> {
    let mut s = String::from("replication,final_dist_to_opt,final_obj_est,total_evals\n");
    for row in rows {
        let _ = write!(s, "{},", row.replication);
        push_opt_real(&mut s, row.final_dist_to_opt);
        s.push(',');
        push_opt_real(&mut s, row.final_obj_est);
        let _ = writeln!(s, ",{}", row.total_evals);
    }
    fs::write(path, s).map_err(|source| RunError::Io {
        path: path.to_path_buf(),
        source,
    })
}
