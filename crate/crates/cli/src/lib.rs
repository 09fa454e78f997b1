//! Command-line surface over `sasaki-join-core`.
//!
//! [`run`] takes an argv and returns what the binary would print together
//! with its exit code: 0 on success, 1 for invalid input, 2 when a core
//! invariant fails.

pub mod args;
pub mod commands;
pub mod encode;
pub mod error;
pub mod report;

use std::ffi::OsString;

use clap::Parser;

use args::{Cli, Command, Format, SweepCommand};
use error::{CliError, EXIT_INVALID, EXIT_OK};
use report::{render, Output, Report};

pub const JOBS_ENV: &str = "SASAKI_JOBS";

/// Worker count: `SASAKI_JOBS`, then `--jobs`, then the available cores.
pub fn resolve_jobs(flag: Option<u32>, env: Option<&str>) -> Result<usize, CliError> {
    if let Some(raw) = env {
        return match raw.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::invalid(format!("{JOBS_ENV} must be a positive integer, got '{raw}'"))),
        };
    }
    match flag {
        Some(n) => Ok(n as usize),
        None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

pub fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let out = &cli.output;
    let mut report = match &cli.command {
        Command::Invariants(a) => commands::invariants(a, out)?,
        Command::Csc(a) => commands::csc(a, out)?,
        Command::Classify(a) => commands::classify(a, out)?,
        Command::Sweep(SweepCommand::Csc(a)) => {
            let env = std::env::var(JOBS_ENV).ok();
            let jobs = resolve_jobs(out.jobs, env.as_deref())?;
            commands::sweep_csc(a, out, jobs)?
        }
        Command::Sweep(SweepCommand::Diffeo(a)) => commands::sweep_diffeo(a, out)?,
    };
    report.caveat &= out.format() == Format::Table || out.quote_caveat;
    Ok(report)
}

pub fn run<I>(argv: I) -> Output
where
    I: IntoIterator,
    I::Item: Into<OsString>,
{
    let cli = match Cli::try_parse_from(args::normalize_argv(argv)) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    stderr: text,
                    code: EXIT_INVALID,
                    ..Output::default()
                }
            } else {
                // --help and --version
                Output {
                    stdout: text,
                    code: EXIT_OK,
                    ..Output::default()
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(report) => render(&report, cli.output.format()),
        Err(e) => Output {
            stderr: format!("sasaki-join: {e}\n"),
            code: e.exit_code(),
            ..Output::default()
        },
    }
}
