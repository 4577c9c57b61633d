//! Voice codec registry and the frame-level transcoding primitive.

pub mod g711;
pub mod g726;

use thiserror::Error;

use crate::audio::FRAME_SAMPLES;

/// G.711 companding law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    Mu,
    A,
}

impl Law {
    pub fn codec_kind(self) -> CodecKind {
        match self {
            Law::Mu => CodecKind::G711Mu,
            Law::A => CodecKind::G711A,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Law::Mu => "mu",
            Law::A => "a",
        }
    }

    pub fn from_name(name: &str) -> Option<Law> {
        match name.to_ascii_lowercase().as_str() {
            "mu" | "u" | "ulaw" | "mulaw" | "mu-law" | "u-law" => Some(Law::Mu),
            "a" | "alaw" | "a-law" => Some(Law::A),
            _ => None,
        }
    }
}

/// Codecs the pipeline knows how to carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodecKind {
    G711Mu,
    G711A,
    G726_32,
}

/// Wire-level facts about a codec at one 20 ms frame per packet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodecSpec {
    pub kind: CodecKind,
    pub name: &'static str,
    /// RTP payload type announced for this codec.
    pub payload_type: u8,
    /// Payload bytes per 20 ms frame.
    pub payload_bytes: usize,
    pub bitrate_bps: u32,
}

/// Default dynamic payload type used when signalling G.726-32 openly.
pub const G726_32_DYNAMIC_PT: u8 = 96;

impl CodecKind {
    pub fn spec(self) -> CodecSpec {
        match self {
            CodecKind::G711Mu => CodecSpec {
                kind: self,
                name: "g711u",
                payload_type: 0,
                payload_bytes: 160,
                bitrate_bps: 64_000,
            },
            CodecKind::G711A => CodecSpec {
                kind: self,
                name: "g711a",
                payload_type: 8,
                payload_bytes: 160,
                bitrate_bps: 64_000,
            },
            CodecKind::G726_32 => CodecSpec {
                kind: self,
                name: "g726-32",
                payload_type: G726_32_DYNAMIC_PT,
                payload_bytes: 80,
                bitrate_bps: 32_000,
            },
        }
    }

    /// The companding law, when this is a G.711 variant.
    pub fn law(self) -> Option<Law> {
        match self {
            CodecKind::G711Mu => Some(Law::Mu),
            CodecKind::G711A => Some(Law::A),
            CodecKind::G726_32 => None,
        }
    }

    pub fn from_name(name: &str) -> Option<CodecKind> {
        match name {
            "g711u" | "pcmu" => Some(CodecKind::G711Mu),
            "g711a" | "pcma" => Some(CodecKind::G711A),
            "g726-32" | "g726" => Some(CodecKind::G726_32),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CodecError {
    #[error("{codec} frame must be {expected} bytes, got {got}")]
    PayloadLength { codec: &'static str, expected: usize, got: usize },
    #[error("{codec} frame must carry {expected} samples, got {got}")]
    SampleCount { codec: &'static str, expected: usize, got: usize },
    #[error("unknown PT {0}")]
    UnknownPayloadType(u8),
    #[error("no covert mapping registered for {0}")]
    NoCovertMapping(&'static str),
}

/// Resolve a payload type to a codec: static assignments first (0, 8), then
/// the caller's dynamic map.
pub fn lookup(
    payload_type: u8,
    dynamic_map: &[(u8, CodecKind)],
) -> Result<CodecSpec, CodecError> {
    match payload_type {
        0 => Ok(CodecKind::G711Mu.spec()),
        8 => Ok(CodecKind::G711A.spec()),
        pt => dynamic_map
            .iter()
            .find(|(mapped, _)| *mapped == pt)
            .map(|(_, kind)| kind.spec())
            .ok_or(CodecError::UnknownPayloadType(pt)),
    }
}

/// The covert codec agreed for an overt codec: always a strictly smaller
/// frame at the same sample rate, so a tail is reclaimed.
pub fn covert_map(overt: CodecKind) -> Result<CodecSpec, CodecError> {
    match overt {
        CodecKind::G711Mu | CodecKind::G711A => Ok(CodecKind::G726_32.spec()),
        CodecKind::G726_32 => Err(CodecError::NoCovertMapping(overt.spec().name)),
    }
}

/// Hidden-data rate for a codec substitution: the per-packet byte difference
/// times the packet rate, in bits per second.
pub fn steg_bandwidth(overt: &CodecSpec, covert: &CodecSpec, pps: u32) -> u64 {
    (overt.payload_bytes.saturating_sub(covert.payload_bytes) * 8) as u64 * pps as u64
}

/// Cross-frame coder state a node needs to encode and decode ADPCM streams.
/// The two directions keep independent predictor state.
#[derive(Debug, Clone, Default)]
pub struct TranscodeState {
    pub adpcm_enc: g726::G726State,
    pub adpcm_dec: g726::G726State,
}

/// Encode one 160-sample frame of linear PCM into `spec`'s payload format.
pub fn encode_frame(
    samples: &[i16],
    spec: &CodecSpec,
    st: &mut TranscodeState,
) -> Result<Vec<u8>, CodecError> {
    if samples.len() != FRAME_SAMPLES {
        return Err(CodecError::SampleCount {
            codec: spec.name,
            expected: FRAME_SAMPLES,
            got: samples.len(),
        });
    }
    Ok(match spec.kind {
        CodecKind::G711Mu => g711::encode_frame(Law::Mu, samples),
        CodecKind::G711A => g711::encode_frame(Law::A, samples),
        CodecKind::G726_32 => st.adpcm_enc.encode_frame(samples),
    })
}

/// Decode one payload frame in `spec`'s format back to linear PCM.
pub fn decode_frame(
    payload: &[u8],
    spec: &CodecSpec,
    st: &mut TranscodeState,
) -> Result<Vec<i16>, CodecError> {
    if payload.len() != spec.payload_bytes {
        return Err(CodecError::PayloadLength {
            codec: spec.name,
            expected: spec.payload_bytes,
            got: payload.len(),
        });
    }
    Ok(match spec.kind {
        CodecKind::G711Mu => g711::decode_frame(Law::Mu, payload),
        CodecKind::G711A => g711::decode_frame(Law::A, payload),
        CodecKind::G726_32 => st.adpcm_dec.decode_frame(payload),
    })
}

/// Re-encode one frame from `from`'s format to `to`'s format. Same-kind
/// conversion is a copy; everything else decodes to PCM and encodes again.
pub fn transcode(
    payload: &[u8],
    from: &CodecSpec,
    to: &CodecSpec,
    st: &mut TranscodeState,
) -> Result<Vec<u8>, CodecError> {
    if from.kind == to.kind {
        if payload.len() != from.payload_bytes {
            return Err(CodecError::PayloadLength {
                codec: from.name,
                expected: from.payload_bytes,
                got: payload.len(),
            });
        }
        return Ok(payload.to_vec());
    }
    let pcm = decode_frame(payload, from, st)?;
    encode_frame(&pcm, to, st)
}
