//! Deterministic speech-like PCM synthesis for repeatable experiments.
//!
//! Real recordings would make every run depend on external data; instead the
//! simulator synthesizes a signal with the gross statistics that matter here:
//! voiced stretches with a harmonic spectrum, unvoiced noise bursts, and
//! near-silent pauses. Everything derives from one 64-bit seed.

use crate::audio::SAMPLE_RATE;

/// Small, well-known 64-bit mixer; one seed drives one reproducible stream.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in [lo, hi).
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo < hi);
        lo + (self.next_u64() % (hi - lo) as u64) as usize
    }

    pub fn bytes(&mut self, len: usize) -> Vec<u8> {
        let mut out = Vec::with_capacity(len);
        while out.len() < len {
            out.extend_from_slice(&self.next_u64().to_le_bytes());
        }
        out.truncate(len);
        out
    }
}

enum Segment {
    Voiced,
    Unvoiced,
    Pause,
}

/// Synthesize `samples` 16-bit samples of speech-like audio at 8 kHz.
pub fn speech_like(seed: u64, samples: usize) -> Vec<i16> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(samples);
    let rate = SAMPLE_RATE as f64;
    while out.len() < samples {
        let kind = match rng.next_u64() % 100 {
            0..=54 => Segment::Voiced,
            55..=79 => Segment::Unvoiced,
            _ => Segment::Pause,
        };
        match kind {
            Segment::Voiced => {
                // a pitch with a few decaying harmonics and light vibrato
                let dur = rng.range(480, 1440);
                let f0 = 80.0 + 140.0 * rng.f64();
                let peak = 12_000.0 + 8_000.0 * rng.f64();
                let phases: Vec<f64> = (0..4)
                    .map(|_| rng.f64() * std::f64::consts::TAU)
                    .collect();
                let amps = [1.0, 0.5, 0.25, 0.12];
                let norm: f64 = amps.iter().sum();
                for t in 0..dur {
                    let attack = (t as f64 / 160.0).min(1.0);
                    let decay = ((dur - t) as f64 / 240.0).min(1.0);
                    let env = attack.min(decay);
                    let secs = t as f64 / rate;
                    let vibrato =
                        1.0 + 0.012 * (std::f64::consts::TAU * 5.0 * secs).sin();
                    let mut s = 0.0;
                    for (k, (&amp, &phase)) in amps.iter().zip(&phases).enumerate() {
                        let freq = f0 * (k + 1) as f64 * vibrato;
                        s += amp * (std::f64::consts::TAU * freq * secs + phase).sin();
                    }
                    out.push((peak * env * s / norm) as i16);
                }
            }
            Segment::Unvoiced => {
                // fricative-like white noise burst
                let dur = rng.range(240, 800);
                let amp = 1_500.0 + 2_500.0 * rng.f64();
                for t in 0..dur {
                    let attack = (t as f64 / 80.0).min(1.0);
                    let decay = ((dur - t) as f64 / 120.0).min(1.0);
                    let env = attack.min(decay);
                    out.push((amp * env * (2.0 * rng.f64() - 1.0)) as i16);
                }
            }
            Segment::Pause => {
                // room tone, quiet enough to fall below the voiced threshold
                let dur = rng.range(160, 960);
                let amp = 60.0 + 60.0 * rng.f64();
                for _ in 0..dur {
                    out.push((amp * (2.0 * rng.f64() - 1.0)) as i16);
                }
            }
        }
    }
    out.truncate(samples);
    out
}
