//! Offline embedding: rewrite a captured G.711 stream in place, hiding a
//! file in the reclaimed half of every payload.
//!
//! This is the mid-path embedder run over a recording instead of live
//! traffic: every RTP header field, packet count, payload length, and
//! datagram addressing survives untouched; payload bytes and UDP checksums
//! are the only rewrites.

use std::path::{Path, PathBuf};

use serde_json::json;
use transteg_core::codec::CodecKind;
use transteg_core::rtp::capture::{write_capture, PacketRecord};
use transteg_core::rtp::checksum::udp_checksum;
use transteg_core::steg::engine::{self, IntermediateEmbedder};
use transteg_core::steg::framing::frame_message;
use transteg_core::steg::mask::MASK_KEY_LEN;

use crate::capture_io;
use crate::commands::REPORT_SCHEMA;
use crate::{CliError, CliResult};

pub struct EmbedArgs {
    pub input: PathBuf,
    pub output: PathBuf,
    pub stego_file: PathBuf,
    pub key: Option<[u8; MASK_KEY_LEN]>,
    pub compress: bool,
    pub filler_seed: u64,
    pub pt_map: Vec<(u8, CodecKind)>,
}

pub fn run(args: &EmbedArgs) -> CliResult {
    let message = std::fs::read(&args.stego_file).map_err(|e| {
        CliError::input(format!("cannot read steganogram {}: {e}", args.stego_file.display()))
    })?;

    let (records, skipped) = capture_io::load_capture(&args.input)?;
    if skipped > 0 {
        eprintln!("note: skipped {skipped} non-RTP frames while importing pcap");
    }
    let stream = capture_io::single_stream(&records, &args.pt_map)?;
    let law = stream.codec.kind.law().ok_or_else(|| {
        CliError::input(format!(
            "overt stream is {}; embedding needs a stream that can be transcoded down",
            stream.codec.name
        ))
    })?;
    capture_io::check_payload_sizes(&stream)?;
    let checksum_failures = capture_io::report_checksum_failures(&records);

    let framed = frame_message(&message, args.compress);
    engine::validate_capacity(framed.len(), records.len() as u64, false)
        .map_err(|e| CliError::usage(e.to_string()))?;

    let mut embedder = IntermediateEmbedder::new(law, framed.clone(), args.filler_seed, args.key);
    let mut rewritten = Vec::with_capacity(records.len());
    for (i, (rec, pkt)) in records.iter().zip(&stream.packets).enumerate() {
        let out = embedder
            .process_packet(pkt, i as u64)
            .map_err(|e| CliError::input(format!("record {i}: {e}")))?;
        let rtp = out.to_bytes();
        let checksum = udp_checksum(rec.src_ip, rec.dst_ip, rec.src_port, rec.dst_port, &rtp);
        rewritten.push(PacketRecord { udp_checksum: checksum, rtp, ..rec.clone() });
    }

    write_capture(&args.output, &rewritten)
        .map_err(|e| CliError::input(format!("writing {}: {e}", args.output.display())))?;

    let source = embedder.source();
    let summary = json!({
        "schema": REPORT_SCHEMA,
        "packets": rewritten.len(),
        "ssrc": stream.ssrc,
        "payload_type": stream.payload_type,
        "overt_codec": stream.codec.name,
        "law": law.name(),
        "masked": args.key.is_some(),
        "message_bytes": message.len(),
        "framed_bytes": framed.len(),
        "bytes_embedded": source.sent_bytes(),
        "filler_bytes": source.filler_bytes(),
        "input_checksum_failures": checksum_failures,
        "output": args.output.display().to_string(),
    });
    println!("{}", serde_json::to_string_pretty(&summary).expect("embed summary"));
    Ok(())
}

/// Embed with default knobs; used by tests that only care about the rewrite.
pub fn simple(input: &Path, output: &Path, stego_file: &Path) -> CliResult {
    run(&EmbedArgs {
        input: input.to_path_buf(),
        output: output.to_path_buf(),
        stego_file: stego_file.to_path_buf(),
        key: None,
        compress: false,
        filler_seed: 0,
        pt_map: Vec::new(),
    })
}
