//! Command-line driver for the exact checks in `repcur-core`.

pub mod args;
pub mod report;
pub mod run;

use thiserror::Error;

pub use args::{parse_args, CheckKind, RunConfig};
pub use report::{run_and_report, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Clap(#[from] clap::Error),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] repcur_core::Error),

    #[error("cannot write report to {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Exit code for checks that all passed.
pub const EXIT_PASS: u8 = 0;
/// Exit code when at least one check failed.
pub const EXIT_FAIL: u8 = 1;
/// Exit code for invalid requests and errors that prevent a check from running.
pub const EXIT_USAGE: u8 = 2;
