//! Command-line front end: constant evaluation, ledger verification and
//! hex digit extraction.
//!
//! Exit codes are 0 for success, 1 for a failed check or an aborted
//! computation, and 2 for usage errors.

pub mod args;
pub mod eval;
pub mod report;

use args::{Cli, Command, DigitsArgs, Format, VerifyArgs};
use clausen::verify;
use report::Report;
use std::io::Write;
use thiserror::Error;

/// A command failure, split by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failure(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) | CliError::Io(_) => 1,
        }
    }
}

/// Runs a parsed command and returns the exit code for a completed run.
pub fn run(cli: Cli, out: &mut impl Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Eval(a) => {
            eval::run(&a, out)?;
            Ok(0)
        }
        Command::Verify(a) => run_verify(&a, out),
        Command::Digits(a) => {
            run_digits(&a, out)?;
            Ok(0)
        }
    }
}

pub(crate) fn check_tol(tol: f64, flag: &str) -> Result<f64, CliError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(tol)
    } else {
        Err(CliError::Usage(format!("{flag} must be positive and finite, got {tol}")))
    }
}

fn run_verify(a: &VerifyArgs, out: &mut impl Write) -> Result<u8, CliError> {
    let scale = a.tol_scale.map(|s| check_tol(s, "--tol-scale")).transpose()?;
    let records = if let Some(id) = &a.check {
        let c = verify::ledger()
            .into_iter()
            .find(|c| c.id == id.as_str())
            .ok_or_else(|| CliError::Usage(format!("unknown check id '{id}'")))?;
        let tol = match a.tol {
            Some(t) => check_tol(t, "--tol")?,
            None => c.tol * scale.unwrap_or(1.0),
        };
        vec![c.run(tol)]
    } else {
        verify::run_all(a.tag, scale)
    };
    let report = Report::new(records);
    match a.format {
        Format::Json => writeln!(out, "{}", report.to_json())?,
        Format::Text => report.write_table(out)?,
    }
    Ok(if verify::all_pass(&report.records) { 0 } else { 1 })
}

fn run_digits(a: &DigitsArgs, out: &mut impl Write) -> Result<(), CliError> {
    let f = clausen::bbp::formula(&a.formula).map_err(|e| CliError::Failure(e.to_string()))?;
    let digits = clausen::bbp::extract_hex_digits(&f, a.position, a.count).map_err(|e| CliError::Failure(e.to_string()))?;
    writeln!(out, "{digits}")?;
    Ok(())
}
