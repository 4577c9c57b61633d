//! Packet capture container: a native record format for generated calls plus
//! a read-only importer for classic pcap files.
//!
//! Native format: the 8-byte magic `TSCAP001`, then per packet a fixed
//! 24-byte record header (all integers little-endian)
//! `u64 timestamp_us, u32 src_ip, u32 dst_ip, u16 src_port, u16 dst_port,
//! u16 udp_checksum, u16 rtp_length` followed by `rtp_length` raw RTP bytes.
//! IP addresses are stored as the u32 value of their network-order octets.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use thiserror::Error;

pub const CAPTURE_MAGIC: &[u8; 8] = b"TSCAP001";
const RECORD_HEADER_LEN: usize = 24;

#[derive(Debug, Error)]
pub enum CaptureError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("not a capture file: bad magic")]
    BadMagic,
    #[error("capture truncated inside a record at offset {0}")]
    TruncatedRecord(usize),
    #[error("not a pcap file: unrecognized magic {0:#010x}")]
    BadPcapMagic(u32),
    #[error("pcap link type {0} not supported (expected 1, Ethernet)")]
    UnsupportedLinkType(u32),
}

/// One captured UDP datagram carrying RTP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PacketRecord {
    pub timestamp_us: u64,
    pub src_ip: [u8; 4],
    pub dst_ip: [u8; 4],
    pub src_port: u16,
    pub dst_port: u16,
    pub udp_checksum: u16,
    pub rtp: Vec<u8>,
}

/// Write records in the native capture format.
pub fn write_capture(path: impl AsRef<Path>, records: &[PacketRecord]) -> Result<(), CaptureError> {
    let mut wr = BufWriter::new(File::create(path)?);
    wr.write_all(CAPTURE_MAGIC)?;
    for rec in records {
        wr.write_all(&rec.timestamp_us.to_le_bytes())?;
        wr.write_all(&u32::from_be_bytes(rec.src_ip).to_le_bytes())?;
        wr.write_all(&u32::from_be_bytes(rec.dst_ip).to_le_bytes())?;
        wr.write_all(&rec.src_port.to_le_bytes())?;
        wr.write_all(&rec.dst_port.to_le_bytes())?;
        wr.write_all(&rec.udp_checksum.to_le_bytes())?;
        wr.write_all(&(rec.rtp.len() as u16).to_le_bytes())?;
        wr.write_all(&rec.rtp)?;
    }
    wr.flush()?;
    Ok(())
}

/// Read a native capture file back into memory.
pub fn read_capture(path: impl AsRef<Path>) -> Result<Vec<PacketRecord>, CaptureError> {
    let mut buf = Vec::new();
    File::open(path)?.read_to_end(&mut buf)?;
    parse_capture(&buf)
}

pub fn parse_capture(buf: &[u8]) -> Result<Vec<PacketRecord>, CaptureError> {
    if buf.len() < CAPTURE_MAGIC.len() || &buf[..CAPTURE_MAGIC.len()] != CAPTURE_MAGIC {
        return Err(CaptureError::BadMagic);
    }
    let mut pos = CAPTURE_MAGIC.len();
    let mut records = Vec::new();
    while pos < buf.len() {
        if pos + RECORD_HEADER_LEN > buf.len() {
            return Err(CaptureError::TruncatedRecord(pos));
        }
        let u64le = |o: usize| u64::from_le_bytes(buf[o..o + 8].try_into().unwrap());
        let u32le = |o: usize| u32::from_le_bytes(buf[o..o + 4].try_into().unwrap());
        let u16le = |o: usize| u16::from_le_bytes(buf[o..o + 2].try_into().unwrap());

        let timestamp_us = u64le(pos);
        let src_ip = u32le(pos + 8).to_be_bytes();
        let dst_ip = u32le(pos + 12).to_be_bytes();
        let src_port = u16le(pos + 16);
        let dst_port = u16le(pos + 18);
        let udp_checksum = u16le(pos + 20);
        let rtp_length = u16le(pos + 22) as usize;
        let body_start = pos + RECORD_HEADER_LEN;
        let body_end = body_start + rtp_length;
        if body_end > buf.len() {
            return Err(CaptureError::TruncatedRecord(pos));
        }
        records.push(PacketRecord {
            timestamp_us,
            src_ip,
            dst_ip,
            src_port,
            dst_port,
            udp_checksum,
            rtp: buf[body_start..body_end].to_vec(),
        });
        pos = body_end;
    }
    Ok(records)
}

/// Result of a pcap import: usable RTP-over-UDP records plus a count of
/// frames skipped because they were not plain unfragmented IPv4/UDP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcapImport {
    pub records: Vec<PacketRecord>,
    pub skipped: u64,
}

/// Import a classic pcap file (little- or big-endian, microsecond or
/// nanosecond timestamps, Ethernet link type only).
pub fn import_pcap(path: impl AsRef<Path>) -> Result<PcapImport, CaptureError> {
    let mut buf = Vec::new();
    File::open(path)?.read_to_end(&mut buf)?;
    parse_pcap(&buf)
}

pub fn parse_pcap(buf: &[u8]) -> Result<PcapImport, CaptureError> {
    if buf.len() < 24 {
        return Err(CaptureError::BadPcapMagic(0));
    }
    let raw_magic = u32::from_le_bytes(buf[0..4].try_into().unwrap());
    let (big_endian, nanos) = match raw_magic {
        0xA1B2_C3D4 => (false, false),
        0xA1B2_3C4D => (false, true),
        0xD4C3_B2A1 => (true, false),
        0x4D3C_B2A1 => (true, true),
        other => return Err(CaptureError::BadPcapMagic(other)),
    };
    let u32f = |b: &[u8]| -> u32 {
        let arr: [u8; 4] = b.try_into().unwrap();
        if big_endian {
            u32::from_be_bytes(arr)
        } else {
            u32::from_le_bytes(arr)
        }
    };
    let link_type = u32f(&buf[20..24]);
    if link_type != 1 {
        return Err(CaptureError::UnsupportedLinkType(link_type));
    }

    let mut pos = 24;
    let mut records = Vec::new();
    let mut skipped = 0u64;
    while pos < buf.len() {
        if pos + 16 > buf.len() {
            return Err(CaptureError::TruncatedRecord(pos));
        }
        let ts_sec = u32f(&buf[pos..pos + 4]) as u64;
        let ts_sub = u32f(&buf[pos + 4..pos + 8]) as u64;
        let incl_len = u32f(&buf[pos + 8..pos + 12]) as usize;
        let orig_len = u32f(&buf[pos + 12..pos + 16]) as usize;
        let frame_start = pos + 16;
        let frame_end = frame_start + incl_len;
        if frame_end > buf.len() {
            return Err(CaptureError::TruncatedRecord(pos));
        }
        pos = frame_end;

        let timestamp_us = ts_sec * 1_000_000 + if nanos { ts_sub / 1000 } else { ts_sub };
        let frame = &buf[frame_start..frame_end];
        match decode_ethernet_udp(frame, incl_len == orig_len) {
            Some((src_ip, dst_ip, src_port, dst_port, udp_checksum, rtp)) => {
                records.push(PacketRecord {
                    timestamp_us,
                    src_ip,
                    dst_ip,
                    src_port,
                    dst_port,
                    udp_checksum,
                    rtp: rtp.to_vec(),
                });
            }
            None => skipped += 1,
        }
    }
    Ok(PcapImport { records, skipped })
}

type UdpFields<'a> = ([u8; 4], [u8; 4], u16, u16, u16, &'a [u8]);

/// Pull an unfragmented IPv4/UDP payload out of one Ethernet frame.
fn decode_ethernet_udp(frame: &[u8], complete: bool) -> Option<UdpFields<'_>> {
    if !complete || frame.len() < 14 {
        return None;
    }
    let ethertype = u16::from_be_bytes([frame[12], frame[13]]);
    if ethertype != 0x0800 {
        return None;
    }
    let ip = &frame[14..];
    if ip.len() < 20 || ip[0] >> 4 != 4 {
        return None;
    }
    let ihl = ((ip[0] & 0x0F) as usize) * 4;
    if ihl < 20 || ip.len() < ihl + 8 {
        return None;
    }
    if ip[9] != 17 {
        return None; // not UDP
    }
    let flags_frag = u16::from_be_bytes([ip[6], ip[7]]);
    if flags_frag & 0x3FFF != 0 {
        return None; // more-fragments set or nonzero offset
    }
    let total_len = u16::from_be_bytes([ip[2], ip[3]]) as usize;
    if total_len < ihl + 8 || total_len > ip.len() {
        return None;
    }
    let src_ip: [u8; 4] = ip[12..16].try_into().unwrap();
    let dst_ip: [u8; 4] = ip[16..20].try_into().unwrap();
    let udp = &ip[ihl..total_len];
    let src_port = u16::from_be_bytes([udp[0], udp[1]]);
    let dst_port = u16::from_be_bytes([udp[2], udp[3]]);
    let udp_len = u16::from_be_bytes([udp[4], udp[5]]) as usize;
    if udp_len < 8 || udp_len > udp.len() {
        return None;
    }
    let udp_checksum = u16::from_be_bytes([udp[6], udp[7]]);
    Some((src_ip, dst_ip, src_port, dst_port, udp_checksum, &udp[8..udp_len]))
}
