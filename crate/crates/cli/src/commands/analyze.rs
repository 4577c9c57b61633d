//! Warden analysis over one or more captures: statistical comparison of the
//! byte distributions seen at different network localizations.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use transteg_core::steg::TapPoint;
use transteg_core::warden::{self, DetectionPolicy, TapObservation, HISTOGRAM_BINS};

use crate::capture_io;
use crate::{CliError, CliResult};

pub struct AnalyzeArgs {
    /// Each entry is `tap=path` or a bare path; bare paths take the next
    /// free tap in path order (before_ss, after_ss, after_sr).
    pub captures: Vec<String>,
    pub policy: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub csv_dir: PathBuf,
}

const PATH_ORDER: [TapPoint; 3] = [TapPoint::BeforeSs, TapPoint::AfterSs, TapPoint::AfterSr];

/// Assign each capture argument a tap point.
fn assign_taps(captures: &[String]) -> CliResult<Vec<(TapPoint, PathBuf)>> {
    if captures.len() > PATH_ORDER.len() {
        return Err(CliError::usage(format!(
            "at most {} captures (one per tap point), got {}",
            PATH_ORDER.len(),
            captures.len()
        )));
    }
    let mut assigned: Vec<(TapPoint, PathBuf)> = Vec::new();
    let taken = |list: &[(TapPoint, PathBuf)], tap: TapPoint| {
        list.iter().any(|(t, _)| *t == tap)
    };
    // Explicit labels first, then bare paths fill the gaps in path order.
    let mut bare: Vec<&String> = Vec::new();
    for arg in captures {
        match arg.split_once('=').and_then(|(name, path)| {
            TapPoint::from_name(name.trim()).map(|tap| (tap, path))
        }) {
            Some((tap, path)) => {
                if taken(&assigned, tap) {
                    return Err(CliError::usage(format!("tap {} given twice", tap.name())));
                }
                assigned.push((tap, PathBuf::from(path.trim())));
            }
            None => bare.push(arg),
        }
    }
    for arg in bare {
        let tap = PATH_ORDER
            .iter()
            .copied()
            .find(|t| !taken(&assigned, *t))
            .expect("count checked above");
        assigned.push((tap, PathBuf::from(arg)));
    }
    assigned.sort_by_key(|(tap, _)| PATH_ORDER.iter().position(|t| t == tap));
    Ok(assigned)
}

fn load_policy(path: Option<&Path>) -> CliResult<DetectionPolicy> {
    match path {
        None => Ok(DetectionPolicy::default()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::input(format!("cannot read policy {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::input(format!("policy {}: {e}", path.display())))
        }
    }
}

fn observe(tap: TapPoint, path: &Path) -> CliResult<TapObservation> {
    let (records, skipped) = capture_io::load_capture(path)?;
    if skipped > 0 {
        eprintln!("note: {}: skipped {skipped} non-RTP frames", path.display());
    }
    if records.is_empty() {
        return Err(CliError::input(format!("{}: capture contains no packets", path.display())));
    }
    let mut obs = TapObservation::new(tap);
    for (i, rec) in records.iter().enumerate() {
        let pkt = transteg_core::rtp::RtpPacket::parse(&rec.rtp)
            .map_err(|e| CliError::input(format!("{} record {i}: not RTP: {e}", path.display())))?;
        obs.observe_payload(pkt.header.payload_type, &pkt.payload);
    }
    Ok(obs)
}

fn write_histogram_csv(dir: &Path, obs: &TapObservation) -> CliResult {
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::input(format!("creating {}: {e}", dir.display())))?;
    let mut text = String::from("byte,payload_count,tail_count\n");
    for b in 0..HISTOGRAM_BINS {
        let _ = writeln!(text, "{b},{},{}", obs.payload.counts()[b], obs.tail.counts()[b]);
    }
    let path = dir.join(format!("hist_{}.csv", obs.tap.name()));
    std::fs::write(&path, text)
        .map_err(|e| CliError::input(format!("writing {}: {e}", path.display())))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

pub fn run(args: &AnalyzeArgs) -> CliResult {
    let assigned = assign_taps(&args.captures)?;
    let policy = load_policy(args.policy.as_deref())?;

    let mut observations = Vec::with_capacity(assigned.len());
    for (tap, path) in &assigned {
        observations.push(observe(*tap, path)?);
    }

    let report = warden::detect(&observations, &policy)
        .map_err(|e| CliError::input(e.to_string()))?;

    for obs in &observations {
        write_histogram_csv(&args.csv_dir, obs)?;
    }

    let text = serde_json::to_string_pretty(&report).expect("warden report serializes");
    println!("{text}");
    if let Some(out) = &args.out {
        std::fs::write(out, format!("{text}\n"))
            .map_err(|e| CliError::input(format!("writing {}: {e}", out.display())))?;
    }
    Ok(())
}
