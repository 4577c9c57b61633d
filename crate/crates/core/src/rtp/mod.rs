//! Minimal RTP packet handling for fixed-rate telephony streams.
//!
//! The pipeline carries plain 12-byte headers: no CSRC list, no extension.
//! Parsing rejects anything else loudly rather than guessing.

pub mod capture;
pub mod checksum;

use thiserror::Error;

pub const RTP_HEADER_LEN: usize = 12;
pub const RTP_VERSION: u8 = 2;

#[derive(Debug, Error)]
pub enum RtpError {
    #[error("datagram shorter than the 12-byte rtp header: {0} bytes")]
    Truncated(usize),
    #[error("unsupported rtp version {0}")]
    Version(u8),
    #[error("{0} csrc entries present; this pipeline carries none")]
    CsrcPresent(u8),
    #[error("header extension present; this pipeline carries none")]
    ExtensionPresent,
}

/// The fixed 12-byte RTP header.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RtpHeader {
    pub padding: bool,
    pub marker: bool,
    /// 7-bit payload type.
    pub payload_type: u8,
    pub sequence: u16,
    pub timestamp: u32,
    pub ssrc: u32,
}

/// A parsed RTP datagram: header plus opaque payload bytes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RtpPacket {
    pub header: RtpHeader,
    pub payload: Vec<u8>,
}

impl RtpHeader {
    pub fn parse(bytes: &[u8]) -> Result<RtpHeader, RtpError> {
        if bytes.len() < RTP_HEADER_LEN {
            return Err(RtpError::Truncated(bytes.len()));
        }
        let version = bytes[0] >> 6;
        if version != RTP_VERSION {
            return Err(RtpError::Version(version));
        }
        let csrc_count = bytes[0] & 0x0F;
        if csrc_count != 0 {
            return Err(RtpError::CsrcPresent(csrc_count));
        }
        if bytes[0] & 0x10 != 0 {
            return Err(RtpError::ExtensionPresent);
        }
        Ok(RtpHeader {
            padding: bytes[0] & 0x20 != 0,
            marker: bytes[1] & 0x80 != 0,
            payload_type: bytes[1] & 0x7F,
            sequence: u16::from_be_bytes([bytes[2], bytes[3]]),
            timestamp: u32::from_be_bytes([bytes[4], bytes[5], bytes[6], bytes[7]]),
            ssrc: u32::from_be_bytes([bytes[8], bytes[9], bytes[10], bytes[11]]),
        })
    }

    pub fn write_to(&self, out: &mut Vec<u8>) {
        out.push((RTP_VERSION << 6) | if self.padding { 0x20 } else { 0 });
        out.push((self.payload_type & 0x7F) | if self.marker { 0x80 } else { 0 });
        out.extend_from_slice(&self.sequence.to_be_bytes());
        out.extend_from_slice(&self.timestamp.to_be_bytes());
        out.extend_from_slice(&self.ssrc.to_be_bytes());
    }
}

impl RtpPacket {
    pub fn parse(bytes: &[u8]) -> Result<RtpPacket, RtpError> {
        let header = RtpHeader::parse(bytes)?;
        Ok(RtpPacket {
            header,
            payload: bytes[RTP_HEADER_LEN..].to_vec(),
        })
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(RTP_HEADER_LEN + self.payload.len());
        self.header.write_to(&mut out);
        out.extend_from_slice(&self.payload);
        out
    }
}
