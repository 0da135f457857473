//! Reproducible benchmark runner for the `zeroth` optimizers.
//!
//! The library half of the `zeroth` binary: [`config`] parses and validates
//! the flat `key = value` benchmark format, [`run`] executes replications
//! and writes deterministic CSV output. Given the same configuration, the
//! written files are byte-identical across runs and machines.

pub mod config;
pub mod run;

pub use config::{parse_config, Algorithm, BenchConfig, ConfigError};
pub use run::{run_benchmark, BenchReport, RunError, SummaryRow};

// The CLI chapter of the guide doc-tests against this crate.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/benchmark-cli.md")]
    mod benchmark_cli {}
}
