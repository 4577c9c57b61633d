//! Command-line front end for the transcoding-steganography laboratory.
//!
//! The `transteg` binary ties the library together: bandwidth arithmetic,
//! full-call simulation, offline embed/extract on capture files, and the
//! warden's statistical analysis. Everything here is deterministic given a
//! config and seeds; only measured processing times vary between runs.

pub mod capture_io;
pub mod commands;
pub mod config;

use std::fmt;
use std::process::ExitCode;

/// Exit status classes. Every failure path maps to exactly one of these so
/// scripts can tell a bad invocation from bad data from a broken invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitClass {
    /// Flags or config that can never work: unknown names, conflicting
    /// options, impossible capacity requests.
    Usage,
    /// Well-formed request over unusable data: missing files, malformed
    /// captures, streams that violate the preconditions.
    Input,
    /// The run itself broke a contract: extraction failed, or an emitted
    /// artifact did not verify.
    Invariant,
}

impl ExitClass {
    pub fn code(self) -> u8 {
        match self {
            ExitClass::Usage => 2,
            ExitClass::Input => 3,
            ExitClass::Invariant => 4,
        }
    }
}

/// A failure carrying its exit class and a message for stderr.
#[derive(Debug)]
pub struct CliError {
    pub class: ExitClass,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn usage(message: impl Into<String>) -> CliError {
        CliError { class: ExitClass::Usage, message: message.into() }
    }

    pub fn input(message: impl Into<String>) -> CliError {
        CliError { class: ExitClass::Input, message: message.into() }
    }

    pub fn invariant(message: impl Into<String>) -> CliError {
        CliError { class: ExitClass::Invariant, message: message.into() }
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

/// Render a command result as a process exit code, printing any error.
pub fn finish(result: CliResult) -> ExitCode {
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.class.code())
        }
    }
}
