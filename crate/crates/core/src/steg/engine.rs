//! Per-packet stage machinery: the node roles a call path composes, plus the
//! covert byte source and sink they share.

use crate::audio::FRAME_SAMPLES;
use crate::codec::{g711, g726::G726State, CodecError, Law};
use crate::rtp::RtpPacket;

use super::framing::{self, UnitKind, UNIT_HEADER_LEN};
use super::mask::{self, MASK_KEY_LEN};
use super::StegError;

/// Payload bytes of the overt G.711 stream per 20 ms packet.
pub const OVERT_PAYLOAD_BYTES: usize = 160;
/// Payload bytes the covert G.726-32 voice needs per packet.
pub const COVERT_VOICE_BYTES: usize = 80;
/// Reclaimed bytes per packet available to the covert channel.
pub const TAIL_CAPACITY: usize = OVERT_PAYLOAD_BYTES - COVERT_VOICE_BYTES;

/// Raw covert channel rate: the reclaimed tail, at 50 packets per second.
pub fn steg_bandwidth_bps() -> u64 {
    (TAIL_CAPACITY * 8) as u64 * (crate::audio::SAMPLE_RATE as u64 / FRAME_SAMPLES as u64)
}

/// Packets the in-band key bootstrap occupies: the framed 16-byte key.
pub fn bootstrap_packet_count() -> u64 {
    ((UNIT_HEADER_LEN + MASK_KEY_LEN) as u64).div_ceil(TAIL_CAPACITY as u64)
}

/// Covert bytes a call of `packets` packets can carry, after the bootstrap
/// window when one is used.
pub fn call_tail_capacity(packets: u64, bootstrap: bool) -> usize {
    let boot = if bootstrap { bootstrap_packet_count() } else { 0 };
    packets.saturating_sub(boot) as usize * TAIL_CAPACITY
}

/// Check that a framed message fits the call before producing any packet.
pub fn validate_capacity(
    framed_len: usize,
    packets: u64,
    bootstrap: bool,
) -> Result<(), StegError> {
    let available = call_tail_capacity(packets, bootstrap);
    if framed_len > available {
        return Err(StegError::MessageTooLarge { needed: framed_len, available });
    }
    Ok(())
}

fn check_frame(samples: &[i16]) -> Result<(), StegError> {
    if samples.len() != FRAME_SAMPLES {
        return Err(CodecError::SampleCount {
            codec: "pcm",
            expected: FRAME_SAMPLES,
            got: samples.len(),
        }
        .into());
    }
    Ok(())
}

fn check_payload(payload: &[u8], codec: &'static str) -> Result<(), StegError> {
    if payload.len() != OVERT_PAYLOAD_BYTES {
        return Err(CodecError::PayloadLength {
            codec,
            expected: OVERT_PAYLOAD_BYTES,
            got: payload.len(),
        }
        .into());
    }
    Ok(())
}

/// Byte feed for an embedding node: staged (framed) bytes first, then keyed
/// pseudorandom filler. Filler byte `j` of packet `i` is always stream
/// position `j` of that packet's filler block, independent of how many
/// staged bytes preceded it.
#[derive(Debug, Clone)]
pub struct StegSource {
    staged: Vec<u8>,
    pos: usize,
    filler: [u8; MASK_KEY_LEN],
    filler_sent: usize,
}

impl StegSource {
    pub fn new(staged: Vec<u8>, filler_seed: u64) -> StegSource {
        StegSource {
            staged,
            pos: 0,
            filler: mask::filler_key(filler_seed),
            filler_sent: 0,
        }
    }

    /// Produce the tail for packet `packet_index`.
    pub fn next_chunk(&mut self, ssrc: u32, packet_index: u64, len: usize) -> Vec<u8> {
        let take = (self.staged.len() - self.pos).min(len);
        let mut chunk = self.staged[self.pos..self.pos + take].to_vec();
        self.pos += take;
        if take < len {
            let block = mask::filler_block(&self.filler, ssrc, packet_index, len);
            chunk.extend_from_slice(&block[take..]);
            self.filler_sent += len - take;
        }
        chunk
    }

    pub fn staged_bytes(&self) -> usize {
        self.staged.len()
    }

    pub fn sent_bytes(&self) -> usize {
        self.pos
    }

    pub fn filler_bytes(&self) -> usize {
        self.filler_sent
    }

    pub fn exhausted(&self) -> bool {
        self.pos == self.staged.len()
    }
}

/// Collects tail bytes on the extracting side and parses the unit stream at
/// the end of the call.
#[derive(Debug, Clone, Default)]
pub struct StegSink {
    buf: Vec<u8>,
}

/// The reassembled covert payload of one call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoveredStego {
    pub message: Vec<u8>,
    pub kind: UnitKind,
    /// Body length as transmitted (compressed size for deflate units).
    pub transmitted_body_len: usize,
    /// Tail bytes collected over the whole call, message plus filler.
    pub tail_bytes: usize,
    /// Key blob, when the stream opened with a bootstrap unit.
    pub bootstrap_blob: Option<Vec<u8>>,
}

impl StegSink {
    pub fn new() -> StegSink {
        StegSink::default()
    }

    pub fn push(&mut self, tail: &[u8]) {
        self.buf.extend_from_slice(tail);
    }

    pub fn collected_bytes(&self) -> usize {
        self.buf.len()
    }

    /// Parse the collected stream: skip leading bootstrap units, return the
    /// first message unit; everything after it is filler by construction.
    pub fn into_recovered(self) -> Result<RecoveredStego, StegError> {
        let total = self.buf.len();
        let mut offset = 0;
        let mut bootstrap_blob = None;
        for _ in 0..4 {
            let (header, body, consumed) = framing::decode_unit(&self.buf[offset..])?;
            offset += consumed;
            match header.kind {
                UnitKind::KeyBootstrap => bootstrap_blob = Some(body),
                UnitKind::Raw | UnitKind::Deflate => {
                    return Ok(RecoveredStego {
                        message: body,
                        kind: header.kind,
                        transmitted_body_len: header.body_len,
                        tail_bytes: total,
                        bootstrap_blob,
                    });
                }
            }
        }
        Err(StegError::NoMessageUnit)
    }
}

/// Assembles the in-band key unit on the learning side.
#[derive(Debug, Clone, Default)]
pub struct BootstrapCollector {
    buf: Vec<u8>,
    total: Option<usize>,
    key: Option<[u8; MASK_KEY_LEN]>,
}

impl BootstrapCollector {
    pub fn new() -> BootstrapCollector {
        BootstrapCollector::default()
    }

    pub fn complete(&self) -> bool {
        self.key.is_some()
    }

    pub fn key(&self) -> Option<&[u8; MASK_KEY_LEN]> {
        self.key.as_ref()
    }

    /// Feed one clear tail; true once the key unit is complete.
    pub fn push(&mut self, tail: &[u8]) -> Result<bool, StegError> {
        if self.key.is_some() {
            return Ok(true);
        }
        self.buf.extend_from_slice(tail);
        if self.total.is_none() && self.buf.len() >= UNIT_HEADER_LEN {
            let header = framing::parse_unit_header(&self.buf)?;
            if header.kind != UnitKind::KeyBootstrap {
                return Err(StegError::BootstrapMissing);
            }
            self.total = Some(UNIT_HEADER_LEN + header.body_len);
        }
        if let Some(total) = self.total {
            if self.buf.len() >= total {
                let blob = &self.buf[UNIT_HEADER_LEN..total];
                let key: [u8; MASK_KEY_LEN] = blob
                    .try_into()
                    .map_err(|_| StegError::BootstrapKeyLength(blob.len()))?;
                self.key = Some(key);
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// The unaware caller: plain G.711, optionally masked from the first packet
/// when the overt call itself is encrypted.
#[derive(Debug, Clone)]
pub struct OvertSender {
    law: Law,
    mask_key: Option<[u8; MASK_KEY_LEN]>,
}

impl OvertSender {
    pub fn new(law: Law, mask_key: Option<[u8; MASK_KEY_LEN]>) -> OvertSender {
        OvertSender { law, mask_key }
    }

    pub fn process_frame(
        &mut self,
        frame: &[i16],
        ssrc: u32,
        packet_index: u64,
    ) -> Result<Vec<u8>, StegError> {
        check_frame(frame)?;
        let mut payload = g711::encode_frame(self.law, frame);
        if let Some(key) = &self.mask_key {
            mask::apply_mask(key, ssrc, packet_index, &mut payload);
        }
        Ok(payload)
    }
}

/// Masking behaviour of the embedding endpoint.
#[derive(Debug, Clone)]
pub enum SenderMasking {
    Off,
    /// Mask every packet; the extracting peer already holds the key.
    PreShared([u8; MASK_KEY_LEN]),
    /// Carry the key in the clear tail of the first packets, then mask.
    Bootstrap([u8; MASK_KEY_LEN]),
}

/// The covert caller: encodes its own voice with the covert codec and fills
/// the reclaimed tail, under a header that still claims G.711.
#[derive(Debug, Clone)]
pub struct SenderEmbedder {
    enc: G726State,
    source: StegSource,
    boot_source: Option<StegSource>,
    boot_packets: u64,
    masking: SenderMasking,
}

impl SenderEmbedder {
    pub fn new(framed_message: Vec<u8>, filler_seed: u64, masking: SenderMasking) -> SenderEmbedder {
        let (boot_source, boot_packets) = match &masking {
            SenderMasking::Bootstrap(key) => {
                let unit = framing::encode_unit(UnitKind::KeyBootstrap, key);
                (
                    Some(StegSource::new(unit, filler_seed)),
                    bootstrap_packet_count(),
                )
            }
            _ => (None, 0),
        };
        SenderEmbedder {
            enc: G726State::new(),
            source: StegSource::new(framed_message, filler_seed),
            boot_source,
            boot_packets,
            masking,
        }
    }

    pub fn process_frame(
        &mut self,
        frame: &[i16],
        ssrc: u32,
        packet_index: u64,
    ) -> Result<Vec<u8>, StegError> {
        check_frame(frame)?;
        let mut payload = self.enc.encode_frame(frame);
        let in_bootstrap = packet_index < self.boot_packets;
        let tail = if in_bootstrap {
            self.boot_source
                .as_mut()
                .expect("bootstrap window implies a bootstrap source")
                .next_chunk(ssrc, packet_index, TAIL_CAPACITY)
        } else {
            self.source.next_chunk(ssrc, packet_index, TAIL_CAPACITY)
        };
        payload.extend_from_slice(&tail);
        match &self.masking {
            SenderMasking::Off => {}
            SenderMasking::PreShared(key) => mask::apply_mask(key, ssrc, packet_index, &mut payload),
            SenderMasking::Bootstrap(key) => {
                if !in_bootstrap {
                    mask::apply_mask(key, ssrc, packet_index, &mut payload);
                }
            }
        }
        Ok(payload)
    }

    pub fn source(&self) -> &StegSource {
        &self.source
    }

    pub fn bootstrap_packets(&self) -> u64 {
        self.boot_packets
    }
}

/// A covert mid-path node that transcodes a passing G.711 stream down to the
/// covert codec and takes over the reclaimed tail.
#[derive(Debug, Clone)]
pub struct IntermediateEmbedder {
    law: Law,
    enc: G726State,
    source: StegSource,
    mask_key: Option<[u8; MASK_KEY_LEN]>,
}

impl IntermediateEmbedder {
    pub fn new(
        law: Law,
        framed_message: Vec<u8>,
        filler_seed: u64,
        mask_key: Option<[u8; MASK_KEY_LEN]>,
    ) -> IntermediateEmbedder {
        IntermediateEmbedder {
            law,
            enc: G726State::new(),
            source: StegSource::new(framed_message, filler_seed),
            mask_key,
        }
    }

    pub fn process_payload(
        &mut self,
        payload: &[u8],
        ssrc: u32,
        packet_index: u64,
    ) -> Result<Vec<u8>, StegError> {
        check_payload(payload, self.law.codec_kind().spec().name)?;
        let mut clear = payload.to_vec();
        if let Some(key) = &self.mask_key {
            mask::apply_mask(key, ssrc, packet_index, &mut clear);
        }
        let pcm = g711::decode_frame(self.law, &clear);
        let mut out = self.enc.encode_frame(&pcm);
        out.extend_from_slice(&self.source.next_chunk(ssrc, packet_index, TAIL_CAPACITY));
        if let Some(key) = &self.mask_key {
            mask::apply_mask(key, ssrc, packet_index, &mut out);
        }
        Ok(out)
    }

    /// Packet-level variant: payload is rewritten in place, every header
    /// field is preserved.
    pub fn process_packet(
        &mut self,
        packet: &RtpPacket,
        packet_index: u64,
    ) -> Result<RtpPacket, StegError> {
        let payload = self.process_payload(&packet.payload, packet.header.ssrc, packet_index)?;
        Ok(RtpPacket { header: packet.header, payload })
    }

    pub fn source(&self) -> &StegSource {
        &self.source
    }
}

/// Masking behaviour of the restoring node.
#[derive(Debug, Clone)]
pub enum RestorerMasking {
    Off,
    PreShared([u8; MASK_KEY_LEN]),
    /// Learn the key from the in-band bootstrap, then unmask and re-mask.
    Learn(BootstrapCollector),
}

/// A covert mid-path node that consumes the tail and re-encodes the covert
/// voice back to G.711, leaving no trace for the unaware receiver.
#[derive(Debug, Clone)]
pub struct IntermediateRestorer {
    law: Law,
    dec: G726State,
    sink: StegSink,
    masking: RestorerMasking,
}

impl IntermediateRestorer {
    pub fn new(law: Law, masking: RestorerMasking) -> IntermediateRestorer {
        IntermediateRestorer {
            law,
            dec: G726State::new(),
            sink: StegSink::new(),
            masking,
        }
    }

    pub fn process_payload(
        &mut self,
        payload: &[u8],
        ssrc: u32,
        packet_index: u64,
    ) -> Result<Vec<u8>, StegError> {
        check_payload(payload, "covert carrier")?;
        let mut work = payload.to_vec();
        let active_key: Option<[u8; MASK_KEY_LEN]> = match &self.masking {
            RestorerMasking::Off => None,
            RestorerMasking::PreShared(key) => Some(*key),
            RestorerMasking::Learn(collector) => collector.key().copied(),
        };
        if let Some(key) = &active_key {
            mask::apply_mask(key, ssrc, packet_index, &mut work);
        }
        let (voice, tail) = work.split_at(COVERT_VOICE_BYTES);
        match &mut self.masking {
            RestorerMasking::Learn(collector) if active_key.is_none() => {
                collector.push(tail)?;
            }
            _ => self.sink.push(tail),
        }
        let pcm = self.dec.decode_frame(voice);
        let mut out = g711::encode_frame(self.law, &pcm);
        if let Some(key) = &active_key {
            mask::apply_mask(key, ssrc, packet_index, &mut out);
        }
        Ok(out)
    }

    /// Packet-level variant: payload is rewritten in place, every header
    /// field is preserved.
    pub fn process_packet(
        &mut self,
        packet: &RtpPacket,
        packet_index: u64,
    ) -> Result<RtpPacket, StegError> {
        let payload = self.process_payload(&packet.payload, packet.header.ssrc, packet_index)?;
        Ok(RtpPacket { header: packet.header, payload })
    }

    pub fn collected_bytes(&self) -> usize {
        self.sink.collected_bytes()
    }

    pub fn learned_key(&self) -> Option<&[u8; MASK_KEY_LEN]> {
        match &self.masking {
            RestorerMasking::Learn(collector) => collector.key(),
            _ => None,
        }
    }

    pub fn finish(self) -> Result<RecoveredStego, StegError> {
        self.sink.into_recovered()
    }
}

/// The unaware callee: decodes what it believes is a plain G.711 stream,
/// unmasking from `masked_from` onward when the overt call is encrypted.
#[derive(Debug, Clone)]
pub struct OvertReceiver {
    law: Law,
    mask: Option<([u8; MASK_KEY_LEN], u64)>,
}

impl OvertReceiver {
    pub fn new(law: Law, mask: Option<([u8; MASK_KEY_LEN], u64)>) -> OvertReceiver {
        OvertReceiver { law, mask }
    }

    pub fn process_payload(
        &mut self,
        payload: &[u8],
        ssrc: u32,
        packet_index: u64,
    ) -> Result<Vec<i16>, StegError> {
        check_payload(payload, self.law.codec_kind().spec().name)?;
        let mut work = payload.to_vec();
        if let Some((key, start)) = &self.mask {
            if packet_index >= *start {
                mask::apply_mask(key, ssrc, packet_index, &mut work);
            }
        }
        Ok(g711::decode_frame(self.law, &work))
    }
}

/// The covert callee: decodes the covert voice and collects the tail.
#[derive(Debug, Clone)]
pub struct ReceiverExtractor {
    dec: G726State,
    sink: StegSink,
    mask_key: Option<[u8; MASK_KEY_LEN]>,
}

impl ReceiverExtractor {
    pub fn new(mask_key: Option<[u8; MASK_KEY_LEN]>) -> ReceiverExtractor {
        ReceiverExtractor {
            dec: G726State::new(),
            sink: StegSink::new(),
            mask_key,
        }
    }

    pub fn process_payload(
        &mut self,
        payload: &[u8],
        ssrc: u32,
        packet_index: u64,
    ) -> Result<Vec<i16>, StegError> {
        check_payload(payload, "covert carrier")?;
        let mut work = payload.to_vec();
        if let Some(key) = &self.mask_key {
            mask::apply_mask(key, ssrc, packet_index, &mut work);
        }
        let (voice, tail) = work.split_at(COVERT_VOICE_BYTES);
        self.sink.push(tail);
        Ok(self.dec.decode_frame(voice))
    }

    pub fn collected_bytes(&self) -> usize {
        self.sink.collected_bytes()
    }

    pub fn finish(self) -> Result<RecoveredStego, StegError> {
        self.sink.into_recovered()
    }
}

/// Offline extraction from captured payloads: unmask with a pre-shared key
/// when given, collect every tail, and parse the unit stream. Does not touch
/// the voice half.
pub fn extract_from_payloads<'a, I>(
    payloads: I,
    ssrc: u32,
    mask_key: Option<&[u8; MASK_KEY_LEN]>,
) -> Result<RecoveredStego, StegError>
where
    I: IntoIterator<Item = &'a [u8]>,
{
    let mut sink = StegSink::new();
    for (index, payload) in payloads.into_iter().enumerate() {
        check_payload(payload, "covert carrier")?;
        let mut work = payload.to_vec();
        if let Some(key) = mask_key {
            mask::apply_mask(key, ssrc, index as u64, &mut work);
        }
        sink.push(&work[COVERT_VOICE_BYTES..]);
    }
    sink.into_recovered()
}
