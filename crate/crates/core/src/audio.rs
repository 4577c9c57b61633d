//! 8 kHz mono 16-bit PCM streams: WAV input/output, frame slicing and a
//! segmental-SNR quality measure.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use thiserror::Error;

/// The only sample rate the telephony pipeline accepts.
pub const SAMPLE_RATE: u32 = 8000;
/// Samples per 20 ms RTP voice frame.
pub const FRAME_SAMPLES: usize = 160;
/// Samples per 10 ms segmental-SNR window.
pub const SNR_WINDOW: usize = 80;

/// Mean-square floor below which a window is treated as silence and skipped
/// by the segmental SNR average.
pub const VOICED_MEAN_SQUARE: f64 = 10_000.0;
/// Per-window SNR clamp range in dB, the usual segmental-SNR convention.
pub const SNR_CLAMP_DB: (f64, f64) = (-10.0, 35.0);

#[derive(Debug, Error)]
pub enum AudioError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed wav container: {0}")]
    Malformed(String),
    #[error("unsupported wav format tag {0} (only integer PCM is accepted)")]
    UnsupportedFormatTag(u16),
    #[error("unsupported channel count {0} (mono only)")]
    UnsupportedChannels(u16),
    #[error("unsupported sample rate {0} (8000 Hz only)")]
    UnsupportedSampleRate(u32),
    #[error("unsupported bit depth {0} (16-bit only)")]
    UnsupportedBitDepth(u16),
}

/// A mono 16-bit 8 kHz sample buffer.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PcmStream {
    samples: Vec<i16>,
}

/// One 20 ms voice frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcmFrame {
    pub samples: [i16; FRAME_SAMPLES],
}

impl PcmFrame {
    pub fn silence() -> Self {
        PcmFrame { samples: [0; FRAME_SAMPLES] }
    }
}

impl PcmStream {
    pub fn new(samples: Vec<i16>) -> Self {
        PcmStream { samples }
    }

    pub fn samples(&self) -> &[i16] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_secs(&self) -> f64 {
        self.samples.len() as f64 / SAMPLE_RATE as f64
    }

    /// Number of 20 ms frames, counting a padded final partial frame.
    pub fn frame_count(&self) -> usize {
        self.samples.len().div_ceil(FRAME_SAMPLES)
    }

    /// Slice into 20 ms frames; the final partial frame is zero-padded.
    pub fn frames(&self) -> Vec<PcmFrame> {
        let mut out = Vec::with_capacity(self.frame_count());
        for chunk in self.samples.chunks(FRAME_SAMPLES) {
            let mut frame = PcmFrame::silence();
            frame.samples[..chunk.len()].copy_from_slice(chunk);
            out.push(frame);
        }
        out
    }

    pub fn extend_from_frame(&mut self, frame: &PcmFrame) {
        self.samples.extend_from_slice(&frame.samples);
    }
}

/// Read a RIFF/WAVE file, insisting on 16-bit integer PCM, mono, 8000 Hz.
pub fn read_wav(path: impl AsRef<Path>) -> Result<PcmStream, AudioError> {
    let mut rd = BufReader::new(File::open(path)?);
    let mut buf = Vec::new();
    rd.read_to_end(&mut buf)?;
    parse_wav(&buf)
}

fn parse_wav(buf: &[u8]) -> Result<PcmStream, AudioError> {
    if buf.len() < 12 || &buf[0..4] != b"RIFF" || &buf[8..12] != b"WAVE" {
        return Err(AudioError::Malformed("missing RIFF/WAVE preamble".into()));
    }

    let mut pos = 12;
    let mut fmt: Option<(u16, u16, u32, u16)> = None; // tag, channels, rate, bits
    let mut data: Option<&[u8]> = None;
    while pos + 8 <= buf.len() {
        let id = &buf[pos..pos + 4];
        let size = u32::from_le_bytes(buf[pos + 4..pos + 8].try_into().unwrap()) as usize;
        let body_start = pos + 8;
        let body_end = body_start + size;
        if body_end > buf.len() {
            return Err(AudioError::Malformed(format!(
                "chunk {:?} overruns file",
                String::from_utf8_lossy(id)
            )));
        }
        let body = &buf[body_start..body_end];
        match id {
            b"fmt " => {
                if size < 16 {
                    return Err(AudioError::Malformed("fmt chunk too small".into()));
                }
                let tag = u16::from_le_bytes(body[0..2].try_into().unwrap());
                let channels = u16::from_le_bytes(body[2..4].try_into().unwrap());
                let rate = u32::from_le_bytes(body[4..8].try_into().unwrap());
                let bits = u16::from_le_bytes(body[14..16].try_into().unwrap());
                fmt = Some((tag, channels, rate, bits));
            }
            b"data" => data = Some(body),
            _ => {} // skip ancillary chunks (LIST, fact, ...)
        }
        // chunks are word-aligned; odd sizes carry a pad byte
        pos = body_end + (size & 1);
    }

    let (tag, channels, rate, bits) = fmt.ok_or_else(|| {
        AudioError::Malformed("missing fmt chunk".into())
    })?;
    if tag != 1 {
        return Err(AudioError::UnsupportedFormatTag(tag));
    }
    if channels != 1 {
        return Err(AudioError::UnsupportedChannels(channels));
    }
    if rate != SAMPLE_RATE {
        return Err(AudioError::UnsupportedSampleRate(rate));
    }
    if bits != 16 {
        return Err(AudioError::UnsupportedBitDepth(bits));
    }
    let data = data.ok_or_else(|| AudioError::Malformed("missing data chunk".into()))?;
    if data.len() % 2 != 0 {
        return Err(AudioError::Malformed("odd data chunk length".into()));
    }
    let samples = data
        .chunks_exact(2)
        .map(|b| i16::from_le_bytes([b[0], b[1]]))
        .collect();
    Ok(PcmStream::new(samples))
}

/// Write a canonical 44-byte-header WAV file (PCM, mono, 8 kHz, 16-bit).
pub fn write_wav(path: impl AsRef<Path>, pcm: &PcmStream) -> Result<(), AudioError> {
    let mut wr = BufWriter::new(File::create(path)?);
    let data_len = (pcm.len() * 2) as u32;

    wr.write_all(b"RIFF")?;
    wr.write_all(&(36 + data_len).to_le_bytes())?;
    wr.write_all(b"WAVE")?;
    wr.write_all(b"fmt ")?;
    wr.write_all(&16u32.to_le_bytes())?;
    wr.write_all(&1u16.to_le_bytes())?; // integer PCM
    wr.write_all(&1u16.to_le_bytes())?; // mono
    wr.write_all(&SAMPLE_RATE.to_le_bytes())?;
    wr.write_all(&(SAMPLE_RATE * 2).to_le_bytes())?; // byte rate
    wr.write_all(&2u16.to_le_bytes())?; // block align
    wr.write_all(&16u16.to_le_bytes())?; // bits per sample
    wr.write_all(b"data")?;
    wr.write_all(&data_len.to_le_bytes())?;
    for s in pcm.samples() {
        wr.write_all(&s.to_le_bytes())?;
    }
    wr.flush()?;
    Ok(())
}

/// Segmental SNR in dB between a reference and a degraded signal of equal
/// length: mean over voiced 10 ms windows of the per-window SNR, each window
/// clamped to [-10, 35] dB. Returns None when no window clears the voice
/// activity floor.
pub fn segmental_snr(reference: &[i16], degraded: &[i16]) -> Option<f64> {
    let n = reference.len().min(degraded.len());
    let mut acc = 0.0f64;
    let mut windows = 0u32;
    for w in (0..n).step_by(SNR_WINDOW) {
        let end = (w + SNR_WINDOW).min(n);
        if end - w < SNR_WINDOW {
            break;
        }
        let mut sig = 0.0f64;
        let mut noise = 0.0f64;
        for i in w..end {
            let r = reference[i] as f64;
            let d = degraded[i] as f64;
            sig += r * r;
            noise += (r - d) * (r - d);
        }
        if sig / (SNR_WINDOW as f64) < VOICED_MEAN_SQUARE {
            continue;
        }
        let snr = if noise == 0.0 {
            SNR_CLAMP_DB.1
        } else {
            (10.0 * (sig / noise).log10()).clamp(SNR_CLAMP_DB.0, SNR_CLAMP_DB.1)
        };
        acc += snr;
        windows += 1;
    }
    (windows > 0).then(|| acc / windows as f64)
}
