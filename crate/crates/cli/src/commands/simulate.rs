//! Full-call simulation: config file plus flag overrides, artifact output,
//! and an exit status that reflects the call's covert outcome.

use std::path::Path;

use transteg_core::sim::{self, CallOutcome, SimError};
use transteg_core::steg::{Scenario, StageKind, StegError};

use crate::config::{self, Settings};
use crate::{CliError, CliResult};

/// The stage that performs extraction in each scenario, for error reports.
fn extraction_stage(scenario: Scenario) -> StageKind {
    *scenario
        .stages()
        .iter()
        .rev()
        .find(|s| matches!(s, StageKind::ReceiverExtractor | StageKind::IntermediateRestorer))
        .expect("every scenario has an extracting stage")
}

/// Sort simulation failures into exit classes, attributing them to the stage
/// where they arise.
fn classify(err: SimError, scenario: Scenario) -> CliError {
    match err {
        SimError::NoPackets => CliError::usage(err.to_string()),
        SimError::Steg(inner) => match inner {
            StegError::MaskingUnsupportedInS4
            | StegError::BootstrapRequiresS2(_)
            | StegError::MaskKeyRequired
            | StegError::TapInvalid { .. }
            | StegError::MessageTooLarge { .. } => CliError::usage(inner.to_string()),
            other => CliError::invariant(format!(
                "{} stage failed: {other}",
                extraction_stage(scenario).name()
            )),
        },
    }
}

pub fn run(config_path: Option<&Path>, flags: Settings, quiet: bool) -> CliResult {
    let mut settings = match config_path {
        Some(path) => config::load_config_file(path)?,
        None => Settings::default(),
    };
    settings = settings.merged_with(flags);

    let resolved = config::build_call(&settings)?;
    let scenario = resolved.call.scenario;

    let outcome: CallOutcome =
        sim::run_call(&resolved.call).map_err(|e| classify(e, scenario))?;

    let written = sim::write_outputs(&outcome, &resolved.out_dir)
        .map_err(|e| CliError::input(format!("writing outputs: {e}")))?;

    if !quiet {
        println!(
            "{}",
            serde_json::to_string_pretty(&outcome.report).expect("report serializes")
        );
    }
    for path in &written {
        eprintln!("wrote {}", path.display());
    }

    if !outcome.report.extraction_ok {
        return Err(CliError::invariant(format!(
            "{} stage recovered {} bytes but the sender embedded a {}-byte message",
            extraction_stage(scenario).name(),
            outcome.recovered.message.len(),
            outcome.report.message_bytes
        )));
    }
    Ok(())
}
