//! Covert transcoding channel over RTP voice payloads.
//!
//! The overt stream carries G.711 at 160 payload bytes per 20 ms packet. A
//! steg-aware node transcodes the voice to G.726-32 (80 bytes, transparently
//! comparable quality), keeps every RTP header field and the payload length
//! unchanged, and uses the reclaimed 80-byte tail as a byte channel. A
//! downstream steg-aware node either consumes the stream directly or restores
//! plain G.711 so the far end never sees the detour.
//!
//! Four placements of the two covert nodes are supported:
//!
//! * `s1` - caller embeds, callee extracts (no transcoding of already-coded
//!   voice; the voice is simply encoded once with the covert codec)
//! * `s2` - caller embeds, a mid-path node extracts and restores G.711 for
//!   the unaware callee (one transcoding)
//! * `s3` - a mid-path node embeds into an unaware caller's stream, the
//!   callee extracts (one transcoding)
//! * `s4` - two mid-path nodes embed and restore around an unaware pair of
//!   endpoints (two transcodings)

pub mod engine;
pub mod framing;
pub mod mask;

use thiserror::Error;

use crate::codec::CodecError;

/// Placement of the covert pair along the call path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    S1,
    S2,
    S3,
    S4,
}

/// Observation points a warden can tap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TapPoint {
    /// On the wire before the embedding node (only exists when the embedder
    /// sits mid-path).
    BeforeSs,
    /// On the wire after the embedding node.
    AfterSs,
    /// On the wire after the restoring node (only exists when a restorer
    /// runs).
    AfterSr,
}

/// The node roles a scenario composes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StageKind {
    OvertSender,
    SenderEmbedder,
    IntermediateEmbedder,
    IntermediateRestorer,
    OvertReceiver,
    ReceiverExtractor,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Scenario::S1 => "s1",
            Scenario::S2 => "s2",
            Scenario::S3 => "s3",
            Scenario::S4 => "s4",
        }
    }

    pub fn from_name(name: &str) -> Option<Scenario> {
        match name.to_ascii_lowercase().as_str() {
            "s1" => Some(Scenario::S1),
            "s2" => Some(Scenario::S2),
            "s3" => Some(Scenario::S3),
            "s4" => Some(Scenario::S4),
            _ => None,
        }
    }

    /// Node chain from caller to callee.
    pub fn stages(self) -> &'static [StageKind] {
        use StageKind::*;
        match self {
            Scenario::S1 => &[SenderEmbedder, ReceiverExtractor],
            Scenario::S2 => &[SenderEmbedder, IntermediateRestorer, OvertReceiver],
            Scenario::S3 => &[OvertSender, IntermediateEmbedder, ReceiverExtractor],
            Scenario::S4 => &[
                OvertSender,
                IntermediateEmbedder,
                IntermediateRestorer,
                OvertReceiver,
            ],
        }
    }

    /// Wire points that exist in this scenario.
    pub fn valid_taps(self) -> &'static [TapPoint] {
        use TapPoint::*;
        match self {
            Scenario::S1 => &[AfterSs],
            Scenario::S2 => &[AfterSs, AfterSr],
            Scenario::S3 => &[BeforeSs, AfterSs],
            Scenario::S4 => &[BeforeSs, AfterSs, AfterSr],
        }
    }

    /// Number of lossy re-encodings the voice path suffers beyond its first
    /// encoding.
    pub fn transcode_count(self) -> u32 {
        match self {
            Scenario::S1 => 0,
            Scenario::S2 | Scenario::S3 => 1,
            Scenario::S4 => 2,
        }
    }
}

impl StageKind {
    pub fn name(self) -> &'static str {
        match self {
            StageKind::OvertSender => "overt_sender",
            StageKind::SenderEmbedder => "sender_embedder",
            StageKind::IntermediateEmbedder => "intermediate_embedder",
            StageKind::IntermediateRestorer => "intermediate_restorer",
            StageKind::OvertReceiver => "overt_receiver",
            StageKind::ReceiverExtractor => "receiver_extractor",
        }
    }
}

impl TapPoint {
    pub fn name(self) -> &'static str {
        match self {
            TapPoint::BeforeSs => "before_ss",
            TapPoint::AfterSs => "after_ss",
            TapPoint::AfterSr => "after_sr",
        }
    }

    pub fn from_name(name: &str) -> Option<TapPoint> {
        match name.to_ascii_lowercase().as_str() {
            "before_ss" => Some(TapPoint::BeforeSs),
            "after_ss" => Some(TapPoint::AfterSs),
            "after_sr" => Some(TapPoint::AfterSr),
            _ => None,
        }
    }
}

/// Payload masking mode for a call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaskMode {
    /// Clear payloads.
    Off,
    /// Every mask-aware node is configured with the session key; masking
    /// covers the whole payload from the first packet.
    PreShared,
    /// The embedding endpoint transmits the session key in the clear tail of
    /// the first packets, then starts masking; the mid-path extractor learns
    /// the key in-band. Only meaningful in scenario s2.
    Bootstrap,
}

impl MaskMode {
    pub fn name(self) -> &'static str {
        match self {
            MaskMode::Off => "off",
            MaskMode::PreShared => "pre-shared",
            MaskMode::Bootstrap => "bootstrap",
        }
    }

    pub fn from_name(name: &str) -> Option<MaskMode> {
        match name.to_ascii_lowercase().as_str() {
            "off" | "none" => Some(MaskMode::Off),
            "pre-shared" | "preshared" => Some(MaskMode::PreShared),
            "bootstrap" => Some(MaskMode::Bootstrap),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum StegError {
    #[error(
        "scenario s4 cannot run with payload masking: both covert nodes sit mid-path, so \
         with end-to-end encryption neither one could read or rewrite the stream"
    )]
    MaskingUnsupportedInS4,
    #[error(
        "in-band key bootstrap only applies to scenario s2; in {0} the covert pair either \
         pre-shares the key or has no clear-text window to carry it"
    )]
    BootstrapRequiresS2(&'static str),
    #[error("masking requested without a {len}-byte key", len = mask::MASK_KEY_LEN)]
    MaskKeyRequired,
    #[error("tap {tap} does not exist in scenario {scenario}")]
    TapInvalid { tap: &'static str, scenario: &'static str },
    #[error(
        "framed message needs {needed} covert bytes but the call carries only {available}"
    )]
    MessageTooLarge { needed: usize, available: usize },
    #[error("covert stream ended inside a unit header ({got} of 8 bytes)")]
    ShortUnitHeader { got: usize },
    #[error("unknown covert unit kind {0}")]
    UnknownUnitKind(u8),
    #[error("unsupported covert unit version {0}")]
    UnitVersion(u8),
    #[error("covert unit header reserved bits set ({0:#06x})")]
    ReservedBits(u16),
    #[error("covert unit truncated: header announces {expected} body bytes, stream carries {got}")]
    TruncatedUnit { expected: usize, got: usize },
    #[error("deflate body rejected: {0}")]
    Deflate(String),
    #[error("first packets do not carry a key bootstrap unit")]
    BootstrapMissing,
    #[error("bootstrap blob is {0} bytes, expected a {len}-byte key", len = mask::MASK_KEY_LEN)]
    BootstrapKeyLength(usize),
    #[error("covert stream carries no message unit")]
    NoMessageUnit,
    #[error(transparent)]
    Codec(#[from] CodecError),
}

/// Reject masking configurations that cannot work for the given placement.
/// This runs before any packet is produced.
pub fn validate_masking(
    scenario: Scenario,
    mode: MaskMode,
    has_key: bool,
) -> Result<(), StegError> {
    match mode {
        MaskMode::Off => Ok(()),
        MaskMode::PreShared | MaskMode::Bootstrap if scenario == Scenario::S4 => {
            Err(StegError::MaskingUnsupportedInS4)
        }
        MaskMode::Bootstrap if scenario != Scenario::S2 => {
            Err(StegError::BootstrapRequiresS2(scenario.name()))
        }
        _ if !has_key => Err(StegError::MaskKeyRequired),
        _ => Ok(()),
    }
}

/// Reject tap requests at points that do not exist in the scenario.
pub fn validate_taps(scenario: Scenario, taps: &[TapPoint]) -> Result<(), StegError> {
    for tap in taps {
        if !scenario.valid_taps().contains(tap) {
            return Err(StegError::TapInvalid {
                tap: tap.name(),
                scenario: scenario.name(),
            });
        }
    }
    Ok(())
}
