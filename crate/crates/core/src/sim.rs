//! Deterministic end-to-end call simulator with wiretap capture points.
//!
//! A call is a straight chain of nodes (caller, optional intermediates,
//! callee) exchanging one 20 ms RTP packet per frame. Every link between two
//! adjacent nodes can be tapped; a tap yields capture records with addressing
//! and UDP checksums as a passive wiretap would see them. Everything except
//! wall-clock timing statistics is a pure function of the configuration, so
//! reruns reproduce captures and recovered payloads byte for byte.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;

use crate::audio::{self, PcmStream, FRAME_SAMPLES};
use crate::codec::Law;
use crate::rtp::capture::{self, PacketRecord};
use crate::rtp::{checksum, RtpHeader, RtpPacket};
use crate::steg::engine::{
    self, bootstrap_packet_count, steg_bandwidth_bps, BootstrapCollector,
    IntermediateEmbedder, IntermediateRestorer, OvertReceiver, OvertSender,
    ReceiverExtractor, RecoveredStego, RestorerMasking, SenderEmbedder, SenderMasking,
    StegSource, TAIL_CAPACITY,
};
use crate::steg::framing::frame_message;
use crate::steg::{
    validate_masking, validate_taps, MaskMode, Scenario, StageKind, StegError, TapPoint,
};
use crate::synth::{speech_like, SplitMix64};
use crate::warden::ByteHistogram;

use thiserror::Error;

/// Base capture timestamp; packets advance 20 ms per frame and 300 us per
/// hop, so tap files of one call interleave plausibly.
const CAPTURE_EPOCH_US: u64 = 1_725_000_000_000_000;
const HOP_DELAY_US: u64 = 300;
const PACKET_INTERVAL_US: u64 = 20_000;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("a call needs at least one packet")]
    NoPackets,
    #[error(transparent)]
    Steg(#[from] StegError),
}

/// Full description of one simulated call.
#[derive(Debug, Clone)]
pub struct CallConfig {
    pub scenario: Scenario,
    pub law: Law,
    pub packets: u64,
    pub seed: u64,
    pub message: Vec<u8>,
    pub compress: bool,
    pub mask_mode: MaskMode,
    pub mask_key: Option<[u8; 16]>,
    /// Seed for the tail filler stream; derived from `seed` when `None`.
    pub filler_seed: Option<u64>,
    pub taps: Vec<TapPoint>,
    /// Caller voice; synthesized from `seed` when `None`, otherwise padded
    /// or truncated to `packets` frames.
    pub audio: Option<Vec<i16>>,
    /// Payload type advertised in every RTP header; the overt codec's
    /// registered value when `None`.
    pub claimed_pt: Option<u8>,
}

impl CallConfig {
    pub fn new(scenario: Scenario) -> CallConfig {
        CallConfig {
            scenario,
            law: Law::Mu,
            packets: 500,
            seed: 1,
            message: Vec::new(),
            compress: false,
            mask_mode: MaskMode::Off,
            mask_key: None,
            filler_seed: None,
            taps: Vec::new(),
            audio: None,
            claimed_pt: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NodeReport {
    pub name: String,
    pub role: String,
    pub address: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TapReport {
    pub tap: String,
    pub link: String,
    pub packets: u64,
    /// Byte-value counts over all payload bytes seen at this tap.
    pub histogram: Vec<u64>,
}

/// Wall-time spent inside one stage, per packet, in microseconds.
#[derive(Debug, Clone, Serialize)]
pub struct StageTiming {
    pub mean_us: f64,
    pub stddev_us: f64,
    pub max_us: f64,
    pub total_us: f64,
}

/// Machine-readable summary of one simulated call.
#[derive(Debug, Clone, Serialize)]
pub struct CallReport {
    pub schema: u32,
    pub scenario: String,
    pub law: String,
    pub mask_mode: String,
    pub packets_sent: u64,
    pub duration_secs: f64,
    pub overt_codec: String,
    pub covert_codec: String,
    pub claimed_payload_type: u8,
    pub overt_payload_bytes: usize,
    pub covert_voice_bytes: usize,
    pub tail_capacity_bytes: usize,
    pub steg_bandwidth_bps: u64,
    pub covert_capacity_bytes: usize,
    pub transcode_count: u32,
    pub message_bytes: usize,
    pub framed_bytes: usize,
    pub message_unit_kind: String,
    pub bytes_embedded: usize,
    pub filler_bytes: usize,
    pub bootstrap_packets: u64,
    pub extraction_ok: bool,
    pub stego_bytes_delivered: usize,
    /// Delivered message bits over the nominal call duration.
    pub goodput_bit_s: f64,
    pub seg_snr_db: Option<f64>,
    /// Per-packet processing time by stage. Wall-clock: the only part of a
    /// report that varies between reruns.
    pub per_stage_processing_us: BTreeMap<String, StageTiming>,
    pub ssrc: u32,
    pub nodes: Vec<NodeReport>,
    pub taps: Vec<TapReport>,
}

/// Everything a simulated call produces.
#[derive(Debug, Clone)]
pub struct CallOutcome {
    pub report: CallReport,
    pub taps: Vec<(TapPoint, Vec<PacketRecord>)>,
    pub receiver_audio: Vec<i16>,
    pub recovered: RecoveredStego,
    pub original_audio: Vec<i16>,
}

struct Node {
    name: &'static str,
    role: StageKind,
    ip: [u8; 4],
    port: u16,
}

/// Lay out caller, intermediates, and callee on documentation address ranges.
fn plan_nodes(scenario: Scenario) -> Vec<Node> {
    let mut intermediates = 0u8;
    scenario
        .stages()
        .iter()
        .map(|&role| match role {
            StageKind::OvertSender | StageKind::SenderEmbedder => Node {
                name: "caller",
                role,
                ip: [192, 0, 2, 10],
                port: 16_384,
            },
            StageKind::OvertReceiver | StageKind::ReceiverExtractor => Node {
                name: "callee",
                role,
                ip: [198, 51, 100, 20],
                port: 16_386,
            },
            StageKind::IntermediateEmbedder | StageKind::IntermediateRestorer => {
                intermediates += 1;
                Node {
                    name: if role == StageKind::IntermediateEmbedder {
                        "embedder"
                    } else {
                        "restorer"
                    },
                    role,
                    ip: [203, 0, 113, intermediates],
                    port: 5_002 + 2 * intermediates as u16,
                }
            }
        })
        .collect()
}

/// Link index (node `l` to node `l + 1`) a tap listens on.
fn tap_link(scenario: Scenario, tap: TapPoint) -> usize {
    let stages = scenario.stages();
    let embedder = stages
        .iter()
        .position(|s| {
            matches!(
                s,
                StageKind::SenderEmbedder | StageKind::IntermediateEmbedder
            )
        })
        .expect("every scenario has an embedding stage");
    match tap {
        TapPoint::BeforeSs => embedder - 1,
        TapPoint::AfterSs => embedder,
        TapPoint::AfterSr => stages
            .iter()
            .position(|s| *s == StageKind::IntermediateRestorer)
            .expect("tap after a restorer requires a restorer"),
    }
}

fn stage_stats(samples: &[f64]) -> StageTiming {
    let n = samples.len().max(1) as f64;
    let total: f64 = samples.iter().sum();
    let mean = total / n;
    let variance = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
    StageTiming {
        mean_us: mean,
        stddev_us: variance.sqrt(),
        max_us: samples.iter().cloned().fold(0.0, f64::max),
        total_us: total,
    }
}

/// Run one call and collect every artifact in memory.
pub fn run_call(config: &CallConfig) -> Result<CallOutcome, SimError> {
    if config.packets == 0 {
        return Err(SimError::NoPackets);
    }
    validate_masking(config.scenario, config.mask_mode, config.mask_key.is_some())?;
    validate_taps(config.scenario, &config.taps)?;

    let bootstrap = config.mask_mode == MaskMode::Bootstrap;
    let framed = frame_message(&config.message, config.compress);
    engine::validate_capacity(framed.len(), config.packets, bootstrap)?;

    let mut rng = SplitMix64::new(config.seed);
    let ssrc = rng.next_u64() as u32;
    let seq0 = rng.next_u64() as u16;
    let ts0 = rng.next_u64() as u32;
    let audio_seed = rng.next_u64();
    let filler_seed = config.filler_seed.unwrap_or_else(|| rng.next_u64());

    let sample_count = config.packets as usize * FRAME_SAMPLES;
    let original = match &config.audio {
        Some(samples) => {
            let mut pcm = samples.clone();
            pcm.resize(sample_count, 0);
            pcm
        }
        None => speech_like(audio_seed, sample_count),
    };
    let nodes = plan_nodes(config.scenario);
    let payload_type = config
        .claimed_pt
        .unwrap_or(config.law.codec_kind().spec().payload_type);

    let mut taps: Vec<(TapPoint, Vec<PacketRecord>)> = {
        let mut ordered = config.taps.clone();
        ordered.sort_by_key(|t| tap_link(config.scenario, *t));
        ordered.dedup();
        ordered.into_iter().map(|t| (t, Vec::new())).collect()
    };

    let mut receiver_audio: Vec<i16> = Vec::with_capacity(original.len());
    let mut timings: BTreeMap<&'static str, Vec<f64>> = BTreeMap::new();
    let clock = |timings: &mut BTreeMap<&'static str, Vec<f64>>,
                 stage: StageKind,
                 t0: Instant| {
        timings
            .entry(stage.name())
            .or_default()
            .push(t0.elapsed().as_secs_f64() * 1e6);
    };

    // per-packet helper: wrap a payload in the (identical) RTP header and
    // record it at every tap listening on `link`
    let record = |taps: &mut Vec<(TapPoint, Vec<PacketRecord>)>,
                  link: usize,
                  index: u64,
                  payload: &[u8]| {
        for (tap, records) in taps.iter_mut() {
            if tap_link(config.scenario, *tap) != link {
                continue;
            }
            let header = RtpHeader {
                padding: false,
                marker: index == 0,
                payload_type,
                sequence: seq0.wrapping_add(index as u16),
                timestamp: ts0.wrapping_add(index as u32 * FRAME_SAMPLES as u32),
                ssrc,
            };
            let packet = RtpPacket { header, payload: payload.to_vec() };
            let rtp = packet.to_bytes();
            let (src, dst) = (&nodes[link], &nodes[link + 1]);
            let udp_checksum =
                checksum::udp_checksum(src.ip, dst.ip, src.port, dst.port, &rtp);
            records.push(PacketRecord {
                timestamp_us: CAPTURE_EPOCH_US
                    + index * PACKET_INTERVAL_US
                    + link as u64 * HOP_DELAY_US,
                src_ip: src.ip,
                dst_ip: dst.ip,
                src_port: src.port,
                dst_port: dst.port,
                udp_checksum,
                rtp,
            });
        }
    };

    let key = config.mask_key;
    let sender_masking = match config.mask_mode {
        MaskMode::Off => SenderMasking::Off,
        MaskMode::PreShared => SenderMasking::PreShared(key.expect("validated")),
        MaskMode::Bootstrap => SenderMasking::Bootstrap(key.expect("validated")),
    };

    // drive the scenario's node chain packet by packet
    let (bytes_embedded, filler_bytes, bootstrap_packets, recovered) = match config.scenario {
        Scenario::S1 => {
            let mut sender = SenderEmbedder::new(framed.clone(), filler_seed, sender_masking);
            let mut extractor = ReceiverExtractor::new(key);
            for (i, frame) in original.chunks(FRAME_SAMPLES).enumerate() {
                let i = i as u64;
                let t0 = Instant::now();
                let wire = sender.process_frame(frame, ssrc, i)?;
                clock(&mut timings, StageKind::SenderEmbedder, t0);
                record(&mut taps, 0, i, &wire);
                let t0 = Instant::now();
                receiver_audio.extend(extractor.process_payload(&wire, ssrc, i)?);
                clock(&mut timings, StageKind::ReceiverExtractor, t0);
            }
            let stats = (sender.source().sent_bytes(), sender.source().filler_bytes());
            (stats.0, stats.1, 0, extractor.finish()?)
        }
        Scenario::S2 => {
            let mut sender = SenderEmbedder::new(framed.clone(), filler_seed, sender_masking);
            let restorer_masking = match config.mask_mode {
                MaskMode::Off => RestorerMasking::Off,
                MaskMode::PreShared => RestorerMasking::PreShared(key.expect("validated")),
                MaskMode::Bootstrap => RestorerMasking::Learn(BootstrapCollector::new()),
            };
            let mut restorer = IntermediateRestorer::new(config.law, restorer_masking);
            let receiver_mask = match config.mask_mode {
                MaskMode::Off => None,
                MaskMode::PreShared => Some((key.expect("validated"), 0)),
                MaskMode::Bootstrap => {
                    Some((key.expect("validated"), bootstrap_packet_count()))
                }
            };
            let mut receiver = OvertReceiver::new(config.law, receiver_mask);
            for (i, frame) in original.chunks(FRAME_SAMPLES).enumerate() {
                let i = i as u64;
                let t0 = Instant::now();
                let wire = sender.process_frame(frame, ssrc, i)?;
                clock(&mut timings, StageKind::SenderEmbedder, t0);
                record(&mut taps, 0, i, &wire);
                let t0 = Instant::now();
                let restored = restorer.process_payload(&wire, ssrc, i)?;
                clock(&mut timings, StageKind::IntermediateRestorer, t0);
                record(&mut taps, 1, i, &restored);
                let t0 = Instant::now();
                receiver_audio.extend(receiver.process_payload(&restored, ssrc, i)?);
                clock(&mut timings, StageKind::OvertReceiver, t0);
            }
            let boot = sender.bootstrap_packets();
            let stats = (sender.source().sent_bytes(), sender.source().filler_bytes());
            (stats.0, stats.1, boot, restorer.finish()?)
        }
        Scenario::S3 => {
            let mut caller = OvertSender::new(config.law, key);
            let mut embedder =
                IntermediateEmbedder::new(config.law, framed.clone(), filler_seed, key);
            let mut extractor = ReceiverExtractor::new(key);
            for (i, frame) in original.chunks(FRAME_SAMPLES).enumerate() {
                let i = i as u64;
                let t0 = Instant::now();
                let overt = caller.process_frame(frame, ssrc, i)?;
                clock(&mut timings, StageKind::OvertSender, t0);
                record(&mut taps, 0, i, &overt);
                let t0 = Instant::now();
                let wire = embedder.process_payload(&overt, ssrc, i)?;
                clock(&mut timings, StageKind::IntermediateEmbedder, t0);
                record(&mut taps, 1, i, &wire);
                let t0 = Instant::now();
                receiver_audio.extend(extractor.process_payload(&wire, ssrc, i)?);
                clock(&mut timings, StageKind::ReceiverExtractor, t0);
            }
            let stats = (
                embedder.source().sent_bytes(),
                embedder.source().filler_bytes(),
            );
            (stats.0, stats.1, 0, extractor.finish()?)
        }
        Scenario::S4 => {
            let mut caller = OvertSender::new(config.law, None);
            let mut embedder =
                IntermediateEmbedder::new(config.law, framed.clone(), filler_seed, None);
            let mut restorer = IntermediateRestorer::new(config.law, RestorerMasking::Off);
            let mut receiver = OvertReceiver::new(config.law, None);
            for (i, frame) in original.chunks(FRAME_SAMPLES).enumerate() {
                let i = i as u64;
                let t0 = Instant::now();
                let overt = caller.process_frame(frame, ssrc, i)?;
                clock(&mut timings, StageKind::OvertSender, t0);
                record(&mut taps, 0, i, &overt);
                let t0 = Instant::now();
                let wire = embedder.process_payload(&overt, ssrc, i)?;
                clock(&mut timings, StageKind::IntermediateEmbedder, t0);
                record(&mut taps, 1, i, &wire);
                let t0 = Instant::now();
                let restored = restorer.process_payload(&wire, ssrc, i)?;
                clock(&mut timings, StageKind::IntermediateRestorer, t0);
                record(&mut taps, 2, i, &restored);
                let t0 = Instant::now();
                receiver_audio.extend(receiver.process_payload(&restored, ssrc, i)?);
                clock(&mut timings, StageKind::OvertReceiver, t0);
            }
            let stats = (
                embedder.source().sent_bytes(),
                embedder.source().filler_bytes(),
            );
            (stats.0, stats.1, 0, restorer.finish()?)
        }
    };

    let duration_secs = config.packets as f64 * PACKET_INTERVAL_US as f64 / 1e6;
    let seg_snr_db = audio::segmental_snr(&original, &receiver_audio);
    let extraction_ok = recovered.message == config.message;

    let unit_kind = if config.compress { "deflate" } else { "raw" };
    let report = CallReport {
        schema: 1,
        scenario: config.scenario.name().to_string(),
        law: config.law.name().to_string(),
        mask_mode: config.mask_mode.name().to_string(),
        packets_sent: config.packets,
        duration_secs,
        overt_codec: config.law.codec_kind().spec().name.to_string(),
        covert_codec: crate::codec::CodecKind::G726_32.spec().name.to_string(),
        claimed_payload_type: payload_type,
        overt_payload_bytes: engine::OVERT_PAYLOAD_BYTES,
        covert_voice_bytes: engine::COVERT_VOICE_BYTES,
        tail_capacity_bytes: TAIL_CAPACITY,
        steg_bandwidth_bps: steg_bandwidth_bps(),
        covert_capacity_bytes: engine::call_tail_capacity(config.packets, bootstrap),
        transcode_count: config.scenario.transcode_count(),
        message_bytes: config.message.len(),
        framed_bytes: framed.len(),
        message_unit_kind: unit_kind.to_string(),
        bytes_embedded,
        filler_bytes,
        bootstrap_packets,
        extraction_ok,
        stego_bytes_delivered: recovered.message.len(),
        goodput_bit_s: recovered.message.len() as f64 * 8.0 / duration_secs,
        seg_snr_db,
        per_stage_processing_us: timings
            .iter()
            .map(|(stage, samples)| (stage.to_string(), stage_stats(samples)))
            .collect(),
        ssrc,
        nodes: nodes
            .iter()
            .map(|n| NodeReport {
                name: n.name.to_string(),
                role: n.role.name().to_string(),
                address: format!("{}.{}.{}.{}:{}", n.ip[0], n.ip[1], n.ip[2], n.ip[3], n.port),
            })
            .collect(),
        taps: taps
            .iter()
            .map(|(tap, records)| {
                let link = tap_link(config.scenario, *tap);
                let mut histogram = ByteHistogram::new();
                for record in records {
                    if let Ok(packet) = RtpPacket::parse(&record.rtp) {
                        histogram.observe(&packet.payload);
                    }
                }
                TapReport {
                    tap: tap.name().to_string(),
                    link: format!("{}->{}", nodes[link].name, nodes[link + 1].name),
                    packets: records.len() as u64,
                    histogram: histogram.counts().to_vec(),
                }
            })
            .collect(),
    };

    Ok(CallOutcome {
        report,
        taps,
        receiver_audio,
        recovered,
        original_audio: original,
    })
}

/// A deterministic payload for calls that just need the channel saturated.
pub fn filler_message(seed: u64, len: usize) -> Vec<u8> {
    let mut src = StegSource::new(Vec::new(), seed);
    src.next_chunk(0, 0, len)
}

#[derive(Debug, Error)]
pub enum OutputError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Audio(#[from] audio::AudioError),
    #[error(transparent)]
    Capture(#[from] capture::CaptureError),
    #[error("report serialization failed: {0}")]
    Report(#[from] serde_json::Error),
}

/// Write the standard artifact set into `dir`; returns the paths written.
pub fn write_outputs(outcome: &CallOutcome, dir: &Path) -> Result<Vec<PathBuf>, OutputError> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();

    let report_path = dir.join("report.json");
    let mut text = serde_json::to_string_pretty(&outcome.report)?;
    text.push('\n');
    std::fs::write(&report_path, text)?;
    written.push(report_path);

    for (tap, records) in &outcome.taps {
        let path = dir.join(format!("tap_{}.tscap", tap.name()));
        capture::write_capture(&path, records)?;
        written.push(path);
    }

    let wav_path = dir.join("received.wav");
    audio::write_wav(&wav_path, &PcmStream::new(outcome.receiver_audio.clone()))?;
    written.push(wav_path);

    let recovered_path = dir.join("recovered.bin");
    std::fs::write(&recovered_path, &outcome.recovered.message)?;
    written.push(recovered_path);

    Ok(written)
}
