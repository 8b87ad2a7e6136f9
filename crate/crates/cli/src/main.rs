//! `lcsplit` command-line front end.
//!
//! Graphs and QASSTs travel as JSON on stdin/stdout so commands compose in
//! pipes. Exit status: 0 on success, 1 when `verify` finds a failing check,
//! 2 for usage and input errors, 3 when an orbit exceeds its budget.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;

/// Errors surfaced to the shell, each with its own exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Lib(#[from] lcsplit::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0} verification check(s) failed")]
    VerifyFailed(usize),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Lib(lcsplit::Error::BudgetExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lcsplit: {e}");
            ExitCode::from(e.code())
        }
    }
}
