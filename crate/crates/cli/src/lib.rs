//! Verification harness over `bwf-core`: identity suites, derivations,
//! residual checks, polarization tables and spin-2 sweeps, reported as
//! deterministic text or JSON.

pub mod commands;
pub mod config;
pub mod report;
pub mod tensor_file;

use std::io::Write;

use config::{Cli, Format, RunConfig};
use report::Report;

/// Exit code when every check passes.
pub const EXIT_PASS: i32 = 0;
/// Exit code when any check fails.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for usage and configuration errors.
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Engine(#[from] bwf_core::Error),
    #[error("cannot write report: {0}")]
    Output(#[from] std::io::Error),
}

pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    Ok(Report::new(cfg.echo(), commands::run_records(cfg)?))
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}

/// Runs the parsed command line and returns the process exit code.
pub fn execute(cli: &Cli) -> i32 {
    match try_execute(cli) {
        Ok(report) if report.passed() => EXIT_PASS,
        Ok(_) => EXIT_FAIL,
        Err(e) => {
            eprintln!("bwf: {e}");
            EXIT_CONFIG
        }
    }
}

fn try_execute(cli: &Cli) -> Result<Report, CliError> {
    let cfg = RunConfig::from_cli(cli)?;
    let report = run(&cfg)?;
    let text = render(&report, cfg.format);
    match &cfg.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(report)
}
