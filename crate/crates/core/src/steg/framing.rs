//! Wire framing for the covert byte channel.
//!
//! The channel is a plain byte stream carried in the reclaimed payload
//! region. It holds a sequence of self-describing units, each introduced by
//! an 8-byte header:
//!
//! ```text
//! offset 0..4  u32 little-endian  body length as transmitted
//! offset 4     u8                 unit kind (0 raw, 1 deflate, 2 key bootstrap)
//! offset 5     u8                 format version, currently 1
//! offset 6..8  u16 little-endian  reserved, zero
//! ```
//!
//! After the last unit the stream carries keyed pseudorandom filler to the
//! end of the call; the explicit length field makes a terminator unnecessary.

use std::io::Read;

use super::StegError;

pub const UNIT_HEADER_LEN: usize = 8;
pub const UNIT_VERSION: u8 = 1;

/// Ceiling for inflated unit bodies, guarding against decompression bombs in
/// hostile captures.
pub const MAX_DECODED_UNIT: usize = 64 * 1024 * 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitKind {
    /// Message bytes, verbatim.
    Raw,
    /// Message bytes, raw-deflate compressed.
    Deflate,
    /// Session-key bootstrap blob.
    KeyBootstrap,
}

impl UnitKind {
    pub fn to_byte(self) -> u8 {
        match self {
            UnitKind::Raw => 0,
            UnitKind::Deflate => 1,
            UnitKind::KeyBootstrap => 2,
        }
    }

    pub fn from_byte(b: u8) -> Option<UnitKind> {
        match b {
            0 => Some(UnitKind::Raw),
            1 => Some(UnitKind::Deflate),
            2 => Some(UnitKind::KeyBootstrap),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            UnitKind::Raw => "raw",
            UnitKind::Deflate => "deflate",
            UnitKind::KeyBootstrap => "key-bootstrap",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitHeader {
    pub kind: UnitKind,
    pub body_len: usize,
}

/// Frame a body into a unit: header plus body bytes, ready to transmit.
pub fn encode_unit(kind: UnitKind, body: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(UNIT_HEADER_LEN + body.len());
    out.extend_from_slice(&(body.len() as u32).to_le_bytes());
    out.push(kind.to_byte());
    out.push(UNIT_VERSION);
    out.extend_from_slice(&0u16.to_le_bytes());
    out.extend_from_slice(body);
    out
}

/// Frame a message for transmission. Compression is a configured mode, not
/// an adaptive one: when requested, the deflate output is sent even if it is
/// larger than the input, so the on-wire statistics reflect the setting.
pub fn frame_message(message: &[u8], compress: bool) -> Vec<u8> {
    if compress {
        let mut body = Vec::new();
        let mut enc =
            flate2::read::DeflateEncoder::new(message, flate2::Compression::default());
        enc.read_to_end(&mut body)
            .expect("in-memory deflate cannot fail");
        encode_unit(UnitKind::Deflate, &body)
    } else {
        encode_unit(UnitKind::Raw, message)
    }
}

/// Parse and validate one unit header from the front of `buf`.
pub fn parse_unit_header(buf: &[u8]) -> Result<UnitHeader, StegError> {
    if buf.len() < UNIT_HEADER_LEN {
        return Err(StegError::ShortUnitHeader { got: buf.len() });
    }
    let body_len = u32::from_le_bytes(buf[0..4].try_into().unwrap()) as usize;
    let kind = UnitKind::from_byte(buf[4]).ok_or(StegError::UnknownUnitKind(buf[4]))?;
    if buf[5] != UNIT_VERSION {
        return Err(StegError::UnitVersion(buf[5]));
    }
    let reserved = u16::from_le_bytes(buf[6..8].try_into().unwrap());
    if reserved != 0 {
        return Err(StegError::ReservedBits(reserved));
    }
    Ok(UnitHeader { kind, body_len })
}

/// Parse one unit from the front of `buf` and decode its body. Returns the
/// header, the decoded body, and the number of stream bytes consumed.
pub fn decode_unit(buf: &[u8]) -> Result<(UnitHeader, Vec<u8>, usize), StegError> {
    let header = parse_unit_header(buf)?;
    let end = UNIT_HEADER_LEN + header.body_len;
    if buf.len() < end {
        return Err(StegError::TruncatedUnit {
            expected: header.body_len,
            got: buf.len() - UNIT_HEADER_LEN,
        });
    }
    let body = &buf[UNIT_HEADER_LEN..end];
    let decoded = match header.kind {
        UnitKind::Raw | UnitKind::KeyBootstrap => body.to_vec(),
        UnitKind::Deflate => {
            let mut out = Vec::new();
            let mut dec = flate2::read::DeflateDecoder::new(body).take(MAX_DECODED_UNIT as u64 + 1);
            dec.read_to_end(&mut out)
                .map_err(|e| StegError::Deflate(e.to_string()))?;
            if out.len() > MAX_DECODED_UNIT {
                return Err(StegError::Deflate(format!(
                    "inflated body exceeds the {MAX_DECODED_UNIT}-byte cap"
                )));
            }
            out
        }
    };
    Ok((header, decoded, end))
}
