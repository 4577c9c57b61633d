//! Capture loading and stream validation shared by the offline commands.
//!
//! Files are identified by magic bytes, not extension: the native format and
//! classic pcap (both byte orders, microsecond or nanosecond stamps) are
//! accepted interchangeably.

use std::path::Path;

use transteg_core::codec::{self, CodecKind, CodecSpec};
use transteg_core::rtp::capture::{self, PacketRecord, CAPTURE_MAGIC};
use transteg_core::rtp::checksum::udp_checksum_valid;
use transteg_core::rtp::RtpPacket;

use crate::{CliError, CliResult};

/// Read a capture in either supported container format. Returns the records
/// plus the number of pcap frames skipped as non-RTP-over-UDP traffic.
pub fn load_capture(path: &Path) -> CliResult<(Vec<PacketRecord>, u64)> {
    let buf = std::fs::read(path)
        .map_err(|e| CliError::input(format!("cannot read capture {}: {e}", path.display())))?;
    if buf.starts_with(CAPTURE_MAGIC) {
        let records = capture::parse_capture(&buf)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        Ok((records, 0))
    } else {
        let import = capture::parse_pcap(&buf)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        Ok((import.records, import.skipped))
    }
}

/// One parsed packet with its record index, plus stream-level facts.
#[derive(Debug)]
pub struct Stream {
    pub packets: Vec<RtpPacket>,
    pub ssrc: u32,
    pub payload_type: u8,
    pub codec: CodecSpec,
}

/// Parse every record as RTP and insist on a single stream of one overt
/// codec: one SSRC, one payload type, resolvable through the static table
/// plus any dynamic payload-type mappings given on the command line.
pub fn single_stream(records: &[PacketRecord], dynamic_map: &[(u8, CodecKind)]) -> CliResult<Stream> {
    if records.is_empty() {
        return Err(CliError::input("capture contains no RTP packets"));
    }
    let mut packets = Vec::with_capacity(records.len());
    for (i, rec) in records.iter().enumerate() {
        let pkt = RtpPacket::parse(&rec.rtp)
            .map_err(|e| CliError::input(format!("record {i}: not RTP: {e}")))?;
        packets.push(pkt);
    }

    let ssrc = packets[0].header.ssrc;
    let payload_type = packets[0].header.payload_type;
    for (i, pkt) in packets.iter().enumerate() {
        if pkt.header.ssrc != ssrc {
            return Err(CliError::input(format!(
                "capture carries multiple RTP streams (SSRC {ssrc:#010x} and {:#010x} at record {i}); \
                 offline processing expects exactly one",
                pkt.header.ssrc
            )));
        }
        if pkt.header.payload_type != payload_type {
            return Err(CliError::input(format!(
                "payload type changes mid-stream (PT {payload_type} then {} at record {i})",
                pkt.header.payload_type
            )));
        }
    }

    let codec = codec::lookup(payload_type, dynamic_map)
        .map_err(|e| CliError::input(e.to_string()))?;
    Ok(Stream { packets, ssrc, payload_type, codec })
}

/// Require every payload to be exactly the overt frame size.
pub fn check_payload_sizes(stream: &Stream) -> CliResult {
    for (i, pkt) in stream.packets.iter().enumerate() {
        if pkt.payload.len() != stream.codec.payload_bytes {
            return Err(CliError::input(format!(
                "record {i}: payload is {} bytes, expected {} for {}",
                pkt.payload.len(),
                stream.codec.payload_bytes,
                stream.codec.name
            )));
        }
    }
    Ok(())
}

/// Verify stored UDP checksums, printing one line per failing packet.
/// Returns the failure count; callers report it but keep going, since the
/// payload bytes are still usable and writers recompute checksums anyway.
pub fn report_checksum_failures(records: &[PacketRecord]) -> u64 {
    let mut failures = 0;
    for (i, rec) in records.iter().enumerate() {
        let ok = udp_checksum_valid(
            rec.src_ip,
            rec.dst_ip,
            rec.src_port,
            rec.dst_port,
            rec.udp_checksum,
            &rec.rtp,
        );
        if !ok {
            failures += 1;
            eprintln!(
                "warning: record {i} fails UDP checksum verification (stored {:#06x})",
                rec.udp_checksum
            );
        }
    }
    failures
}

/// Count breaks in the RTP sequence numbering (wrap-aware).
pub fn sequence_gaps(packets: &[RtpPacket]) -> u64 {
    packets
        .windows(2)
        .filter(|w| w[1].header.sequence != w[0].header.sequence.wrapping_add(1))
        .count() as u64
}

/// Parse a `PT=codec` mapping argument, e.g. `96=g711u`.
pub fn parse_pt_mapping(arg: &str) -> CliResult<(u8, CodecKind)> {
    let (pt, name) = arg
        .split_once('=')
        .ok_or_else(|| CliError::usage(format!("--pt-map wants PT=codec, got {arg:?}")))?;
    let pt: u8 = pt
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("--pt-map: not a payload type: {:?}", pt.trim())))?;
    if pt > 127 {
        return Err(CliError::usage(format!("--pt-map: payload type {pt} out of range")));
    }
    let kind = CodecKind::from_name(name.trim())
        .ok_or_else(|| CliError::usage(format!("--pt-map: unknown codec {:?}", name.trim())))?;
    Ok((pt, kind))
}
