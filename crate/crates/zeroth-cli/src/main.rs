//! Command-line entry point. Exit codes: 0 on success, 1 when a run fails
//! (any replication aborts or output cannot be written), 2 when the
//! configuration is unreadable or invalid.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use zeroth_cli::{parse_config, run_benchmark, BenchConfig};

#[derive(Parser)]
#[command(
    name = "zeroth",
    version,
    about = "Reproducible benchmark runner for the zeroth optimizers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the benchmark described by a config file.
    Run {
        /// Path to the benchmark config.
        #[arg(long)]
        config: PathBuf,
        /// Overrides `out_dir` from the config.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Overrides `seed` from the config.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Parse and validate a config file without running anything.
    Validate {
        /// Path to the benchmark config.
        #[arg(long)]
        config: PathBuf,
    },
}

fn load_config(path: &PathBuf) -> Result<BenchConfig, ExitCode> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(2)
    })?;
    parse_config(&text).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}

fn run(config: PathBuf, out: Option<PathBuf>, seed: Option<u64>) -> ExitCode {
    let mut cfg = match load_config(&config) {
        Ok(c) => c,
        Err(code) => return code,
    };
    if let Some(out) = out {
        cfg.out_dir = out.display().to_string();
    }
    if let Some(seed) = seed {
        cfg.seed = seed;
    }

    let report = match run_benchmark(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };

    for row in &report.rows {
        let wall = report
            .wall_seconds
            .iter()
            .find(|(r, _)| *r == row.replication)
            .map(|(_, s)| *s)
            .unwrap_or(0.0);
        let dist = match row.final_dist_to_opt {
            Some(d) => format!("{d:.6e}"),
            None => "-".to_string(),
        };
        let obj = match row.final_obj_est {
            Some(v) => format!("{v:.6e}"),
            None => "-".to_string(),
        };
        println!(
            "replication {}: dist_to_opt {} | obj_est {} | evals {} | wall {:.3}s",
            row.replication, dist, obj, row.total_evals, wall
        );
    }
    for (r, diagnostic) in &report.failures {
        eprintln!("replication {r} failed: {diagnostic}");
    }
    println!(
        "wrote per-replication traces and summary.csv under {}",
        report.out_dir.display()
    );

    if report.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn validate(config: PathBuf) -> ExitCode {
    match load_config(&config) {
        Ok(cfg) => {
            println!("config OK:");
            print!("{}", cfg.render());
            ExitCode::SUCCESS
        }
        Err(code) => code,
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Run { config, out, seed } => run(config, out, seed),
        Command::Validate { config } => validate(config),
    }
}
