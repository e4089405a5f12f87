//! Command-line front end for `rgc-core`: single coefficients, ranges,
//! the published tables, comparisons and the bₖ constants.
//!
//! Exit codes: 0 success (also for `--help`/`--version`), 1 usage error,
//! 2 when at least one row failed to compute.

pub mod args;
pub mod commands;
pub mod report;

use clap::Parser;

use args::{Cli, Command};
use commands::UsageError;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PARTIAL: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: EXIT_USAGE }
            } else {
                Outcome { stdout: text, stderr: String::new(), code: EXIT_OK }
            };
        }
    };
    let (result, common) = match &cli.command {
        Command::Compute { indices, methods, common } => (commands::run_compute(indices, methods, common), common),
        Command::Table { which, common } => (commands::run_table(*which, common), common),
        Command::Compare { indices, methods, against, common } => {
            (commands::run_compare(indices, methods, *against, common), common)
        }
        Command::Bn { max, common } => (commands::run_bn(*max as usize, common), common),
    };
    match result {
        Err(UsageError(msg)) => Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_USAGE },
        Ok(report) => {
            let stdout = report.render(common.format, common.digits as usize);
            if report.has_failures() {
                Outcome { stdout, stderr: "error: some rows failed to compute\n".into(), code: EXIT_PARTIAL }
            } else {
                Outcome { stdout, stderr: String::new(), code: EXIT_OK }
            }
        }
    }
}
