//! Offline extraction: collect the covert tail from a captured stream and
//! reassemble the steganogram.

use std::path::PathBuf;

use serde_json::json;
use transteg_core::codec::CodecKind;
use transteg_core::steg::engine::extract_from_payloads;
use transteg_core::steg::mask::MASK_KEY_LEN;

use crate::capture_io;
use crate::commands::REPORT_SCHEMA;
use crate::{CliError, CliResult};

pub struct ExtractArgs {
    pub input: PathBuf,
    pub output: PathBuf,
    pub key: Option<[u8; MASK_KEY_LEN]>,
    pub pt_map: Vec<(u8, CodecKind)>,
}

pub fn run(args: &ExtractArgs) -> CliResult {
    let (records, skipped) = capture_io::load_capture(&args.input)?;
    if skipped > 0 {
        eprintln!("note: skipped {skipped} non-RTP frames while importing pcap");
    }
    let stream = capture_io::single_stream(&records, &args.pt_map)?;
    capture_io::check_payload_sizes(&stream)?;
    let checksum_failures = capture_io::report_checksum_failures(&records);
    let gaps = capture_io::sequence_gaps(&stream.packets);
    if gaps > 0 {
        eprintln!("warning: {gaps} sequence-number gaps; extraction uses capture order");
    }

    let payloads = stream.packets.iter().map(|p| p.payload.as_slice());
    let recovered = extract_from_payloads(payloads, stream.ssrc, args.key.as_ref())
        .map_err(|e| CliError::input(format!("no steganogram recovered: {e}")))?;

    std::fs::write(&args.output, &recovered.message)
        .map_err(|e| CliError::input(format!("writing {}: {e}", args.output.display())))?;

    let summary = json!({
        "schema": REPORT_SCHEMA,
        "packets": stream.packets.len(),
        "ssrc": stream.ssrc,
        "payload_type": stream.payload_type,
        "unit_kind": recovered.kind.name(),
        "message_bytes": recovered.message.len(),
        "transmitted_body_len": recovered.transmitted_body_len,
        "tail_bytes_collected": recovered.tail_bytes,
        "carried_bootstrap_key": recovered.bootstrap_blob.is_some(),
        "input_checksum_failures": checksum_failures,
        "sequence_gaps": gaps,
        "output": args.output.display().to_string(),
    });
    println!("{}", serde_json::to_string_pretty(&summary).expect("extract summary"));
    Ok(())
}
