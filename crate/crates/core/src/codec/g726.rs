//! 32 kbit/s ADPCM (G.726-32), ported from the classic public-domain CCITT
//! reference coder (Sun Microsystems g72x.c / g721.c).
//!
//! The port preserves the original C `short` truncation and arithmetic-shift
//! semantics at every assignment; state evolution is bit-exact with the
//! reference, which the frozen oracle vectors in the test suite verify.

const POWER2: [i32; 15] = [
    1, 2, 4, 8, 0x10, 0x20, 0x40, 0x80, 0x100, 0x200, 0x400, 0x800, 0x1000, 0x2000, 0x4000,
];
/// Quantizer decision levels for the 4-bit coder.
const QTAB_721: [i32; 7] = [-124, 80, 178, 246, 300, 349, 400];
/// Reconstructed log-magnitude per code.
const DQLNTAB: [i32; 16] = [
    -2048, 4, 135, 213, 273, 323, 373, 425, 425, 373, 323, 273, 213, 135, 4, -2048,
];
/// Quantizer scale-factor multipliers per code (applied as `witab << 5`).
const WITAB: [i32; 16] = [
    -12, 18, 41, 64, 112, 198, 355, 1122, 1122, 355, 198, 112, 64, 41, 18, -12,
];
/// Adaptation-speed weights per code.
const FITAB: [i32; 16] = [
    0, 0, 0, 0x200, 0x200, 0x200, 0x600, 0xE00, 0xE00, 0x600, 0x200, 0x200, 0x200, 0, 0, 0,
];

/// Index of the first table entry greater than `val` (the reference `quan`).
fn quan(val: i32, table: &[i32]) -> i32 {
    for (i, &t) in table.iter().enumerate() {
        if val < t {
            return i as i32;
        }
    }
    table.len() as i32
}

/// Floating-point-ish multiply of a predictor coefficient with a stored
/// 4-bit-exponent/6-bit-mantissa signal value.
fn fmult(an: i32, srn: i32) -> i32 {
    let anmag = if an > 0 { an } else { (-an) & 0x1FFF };
    let anexp = quan(anmag, &POWER2) - 6;
    let anmant = if anmag == 0 {
        32
    } else if anexp >= 0 {
        anmag >> anexp
    } else {
        anmag << -anexp
    };
    let wanexp = anexp + ((srn >> 6) & 0xF) - 13;
    let wanmant = (anmant * (srn & 0x3F) + 0x30) >> 4;
    let retval = if wanexp >= 0 {
        (wanmant << wanexp) & 0x7FFF
    } else {
        wanmant >> -wanexp
    };
    if (an ^ srn) < 0 {
        -retval
    } else {
        retval
    }
}

/// Inverse-quantize one code to a difference-signal estimate.
fn reconstruct(sign: bool, dqln: i32, y: i32) -> i32 {
    let dql = (dqln + (y >> 2)) as i16;
    if dql < 0 {
        if sign {
            -0x8000
        } else {
            0
        }
    } else {
        let dex = ((dql >> 7) & 15) as i32;
        let dqt = 128 + (dql & 127) as i32;
        let dq = (dqt << 7) >> (14 - dex);
        if sign {
            dq - 0x8000
        } else {
            dq
        }
    }
}

/// Adaptive predictor and quantizer-scale state, persisted across samples.
#[derive(Debug, Clone)]
pub struct G726State {
    /// Locked (slow) quantizer scale factor; the only C `long` field.
    yl: i32,
    /// Unlocked (fast) quantizer scale factor.
    yu: i16,
    /// Short-term code-magnitude average.
    dms: i16,
    /// Long-term code-magnitude average.
    dml: i16,
    /// Speed-control parameter blending fast/slow scale factors.
    ap: i16,
    /// Pole predictor coefficients.
    a: [i16; 2],
    /// Zero predictor coefficients.
    b: [i16; 6],
    /// Signs of the two previous difference estimates.
    pk: [i16; 2],
    /// Quantized difference history, floating-point format.
    dq: [i16; 6],
    /// Reconstructed signal history, floating-point format.
    sr: [i16; 2],
    /// Tone-detected flag.
    td: i16,
}

impl Default for G726State {
    fn default() -> Self {
        Self::new()
    }
}

impl G726State {
    /// Reset state, as the reference `g72x_init_state`.
    pub fn new() -> Self {
        G726State {
            yl: 34816,
            yu: 544,
            dms: 0,
            dml: 0,
            ap: 0,
            a: [0, 0],
            b: [0; 6],
            pk: [0, 0],
            dq: [32; 6],
            sr: [32, 32],
            td: 0,
        }
    }

    /// Zero-predictor partial estimate (`sezi`), kept at full int width.
    fn predictor_zero(&self) -> i32 {
        let mut sezi = fmult((self.b[0] as i32) >> 2, self.dq[0] as i32);
        for i in 1..6 {
            sezi += fmult((self.b[i] as i32) >> 2, self.dq[i] as i32);
        }
        sezi
    }

    fn predictor_pole(&self) -> i32 {
        fmult((self.a[1] as i32) >> 2, self.sr[1] as i32)
            + fmult((self.a[0] as i32) >> 2, self.sr[0] as i32)
    }

    /// Current quantizer step-size mix of the fast and slow scale factors.
    fn step_size(&self) -> i32 {
        if self.ap >= 256 {
            return self.yu as i32;
        }
        let y = self.yl >> 6;
        let dif = self.yu as i32 - y;
        let al = (self.ap as i32) >> 2;
        if dif > 0 {
            y + ((dif * al) >> 6)
        } else if dif < 0 {
            y + ((dif * al + 0x3F) >> 6)
        } else {
            y
        }
    }

    /// Quantize the prediction difference `d` against scale factor `y`.
    fn quantize(&self, d: i32, y: i32, table: &[i32]) -> i32 {
        let dqm = d.abs();
        let exp = quan(dqm >> 1, &POWER2);
        let mant = ((dqm << 7) >> exp) & 0x7F;
        let dl = (exp << 7) + mant;
        let dln = dl - (y >> 2);
        let i = quan(dln, table);
        let size = table.len() as i32;
        if d < 0 {
            (size << 1) + 1 - i
        } else if i == 0 {
            (size << 1) + 1
        } else {
            i
        }
    }

    /// Post-sample state update common to encoder and decoder.
    #[allow(clippy::too_many_arguments)]
    fn update(&mut self, code_size: i32, y: i32, wi: i32, fi: i32, dq: i32, sr: i32, dqsez: i32) {
        let mut a2p: i16 = 0;
        let pk0: i16 = if dqsez < 0 { 1 } else { 0 };
        let mag = dq & 0x7FFF;

        // transition detector: the thresholds deliberately truncate to short
        let ylint = self.yl >> 15;
        let ylfrac = (self.yl >> 10) & 0x1F;
        let thr1 = ((32 + ylfrac) << ylint) as i16;
        let thr2 = thr1; // reference limits thr1 to 256K, unreachable in 16 bits
        let dqthr = ((thr2 as i32 + ((thr2 as i32) >> 1)) >> 1) as i16;
        let tr = self.td != 0 && mag > dqthr as i32;

        // fast scale factor, limited to [1.06, 10.0]
        self.yu = (y + ((wi - y) >> 5)) as i16;
        if self.yu < 544 {
            self.yu = 544;
        } else if self.yu > 5120 {
            self.yu = 5120;
        }

        // slow scale factor follows with a 1/64 leak
        self.yl += self.yu as i32 + ((-self.yl) >> 6);

        if tr {
            self.a = [0, 0];
            self.b = [0; 6];
        } else {
            // second pole coefficient
            let pks1 = pk0 ^ self.pk[0];
            a2p = (self.a[1] as i32 - ((self.a[1] as i32) >> 7)) as i16;
            if dqsez != 0 {
                let fa1: i16 = if pks1 != 0 {
                    self.a[0]
                } else {
                    (-(self.a[0] as i32)) as i16
                };
                if fa1 < -8191 {
                    a2p = (a2p as i32 - 0x100) as i16;
                } else if fa1 > 8191 {
                    a2p = (a2p as i32 + 0xFF) as i16;
                } else {
                    a2p = (a2p as i32 + ((fa1 as i32) >> 5)) as i16;
                }

                if (pk0 ^ self.pk[1]) != 0 {
                    if a2p <= -12160 {
                        a2p = -12288;
                    } else if a2p >= 12416 {
                        a2p = 12288;
                    } else {
                        a2p = (a2p as i32 - 0x80) as i16;
                    }
                } else if a2p <= -12416 {
                    a2p = -12288;
                } else if a2p >= 12160 {
                    a2p = 12288;
                } else {
                    a2p = (a2p as i32 + 0x80) as i16;
                }
            }
            self.a[1] = a2p;

            // first pole coefficient
            self.a[0] = (self.a[0] as i32 - ((self.a[0] as i32) >> 8)) as i16;
            if dqsez != 0 {
                if pks1 == 0 {
                    self.a[0] = (self.a[0] as i32 + 192) as i16;
                } else {
                    self.a[0] = (self.a[0] as i32 - 192) as i16;
                }
            }
            let a1ul = (15360 - a2p as i32) as i16;
            if (self.a[0] as i32) < -(a1ul as i32) {
                self.a[0] = (-(a1ul as i32)) as i16;
            } else if self.a[0] > a1ul {
                self.a[0] = a1ul;
            }

            // zero predictor coefficients
            for i in 0..6 {
                if code_size == 5 {
                    self.b[i] = (self.b[i] as i32 - ((self.b[i] as i32) >> 9)) as i16;
                } else {
                    self.b[i] = (self.b[i] as i32 - ((self.b[i] as i32) >> 8)) as i16;
                }
                if mag != 0 {
                    if (dq ^ self.dq[i] as i32) >= 0 {
                        self.b[i] = (self.b[i] as i32 + 128) as i16;
                    } else {
                        self.b[i] = (self.b[i] as i32 - 128) as i16;
                    }
                }
            }
        }

        for i in (1..6).rev() {
            self.dq[i] = self.dq[i - 1];
        }
        // store dq in 4-bit-exponent / 6-bit-mantissa floating point
        if mag == 0 {
            self.dq[0] = if dq >= 0 { 0x20 } else { 0xFC20u16 as i16 };
        } else {
            let exp = quan(mag, &POWER2);
            if dq >= 0 {
                self.dq[0] = ((exp << 6) + ((mag << 6) >> exp)) as i16;
            } else {
                self.dq[0] = ((exp << 6) + ((mag << 6) >> exp) - 0x400) as i16;
            }
        }

        self.sr[1] = self.sr[0];
        // store sr in the same floating-point format
        if sr == 0 {
            self.sr[0] = 0x20;
        } else if sr > 0 {
            let exp = quan(sr, &POWER2);
            self.sr[0] = ((exp << 6) + ((sr << 6) >> exp)) as i16;
        } else if sr > -32768 {
            let mag2 = -sr;
            let exp = quan(mag2, &POWER2);
            self.sr[0] = ((exp << 6) + ((mag2 << 6) >> exp) - 0x400) as i16;
        } else {
            self.sr[0] = 0xFC20u16 as i16;
        }

        self.pk[1] = self.pk[0];
        self.pk[0] = pk0;

        self.td = if tr {
            0
        } else if a2p < -11776 {
            1
        } else {
            0
        };

        // adaptation speed control
        self.dms = (self.dms as i32 + ((fi - self.dms as i32) >> 5)) as i16;
        self.dml = (self.dml as i32 + (((fi << 2) - self.dml as i32) >> 7)) as i16;

        if tr {
            self.ap = 256;
        } else if y < 1536 || self.td == 1 {
            self.ap = (self.ap as i32 + ((0x200 - self.ap as i32) >> 4)) as i16;
        } else if (((self.dms as i32) << 2) - self.dml as i32).abs() >= (self.dml as i32) >> 3 {
            self.ap = (self.ap as i32 + ((0x200 - self.ap as i32) >> 4)) as i16;
        } else {
            self.ap = (self.ap as i32 + ((-(self.ap as i32)) >> 4)) as i16;
        }
    }

    /// Encode one 16-bit linear sample to a 4-bit code.
    pub fn encode_sample(&mut self, sample: i16) -> u8 {
        let sl = (sample as i32) >> 2; // 14-bit dynamic range

        let sezi = self.predictor_zero() as i16;
        let sez = (sezi >> 1) as i32;
        let se = ((sezi as i32 + self.predictor_pole()) >> 1) as i16;

        let d = (sl - se as i32) as i16;

        let y = self.step_size();
        let i = self.quantize(d as i32, y, &QTAB_721);

        let dq = reconstruct(i & 8 != 0, DQLNTAB[i as usize], y) as i16;
        let sr = if dq < 0 {
            (se as i32 - (dq as i32 & 0x3FFF)) as i16
        } else {
            (se as i32 + dq as i32) as i16
        };

        let dqsez = (sr as i32 + sez - se as i32) as i16;

        self.update(4, y, WITAB[i as usize] << 5, FITAB[i as usize], dq as i32, sr as i32, dqsez as i32);
        i as u8
    }

    /// Decode one 4-bit code to a 16-bit linear sample.
    pub fn decode_sample(&mut self, code: u8) -> i16 {
        let i = (code & 0x0F) as i32;

        let sezi = self.predictor_zero() as i16;
        let sez = (sezi >> 1) as i32;
        let sei = (sezi as i32 + self.predictor_pole()) as i16;
        let se = (sei >> 1) as i32;

        let y = self.step_size();

        let dq = reconstruct(i & 8 != 0, DQLNTAB[i as usize], y) as i16;
        let sr = if dq < 0 {
            (se - (dq as i32 & 0x3FFF)) as i16
        } else {
            (se + dq as i32) as i16
        };

        let dqsez = (sr as i32 - se + sez) as i16;

        self.update(4, y, WITAB[i as usize] << 5, FITAB[i as usize], dq as i32, sr as i32, dqsez as i32);

        (((sr as i32) << 2).clamp(-32768, 32767)) as i16
    }

    /// Encode an even number of samples, packing pairs of 4-bit codes with
    /// the first sample of each pair in the low nibble.
    pub fn encode_frame(&mut self, samples: &[i16]) -> Vec<u8> {
        assert!(samples.len() % 2 == 0, "ADPCM frames pack two samples per byte");
        let mut out = Vec::with_capacity(samples.len() / 2);
        for pair in samples.chunks_exact(2) {
            let lo = self.encode_sample(pair[0]);
            let hi = self.encode_sample(pair[1]);
            out.push((hi << 4) | lo);
        }
        out
    }

    /// Decode packed 4-bit codes, low nibble first.
    pub fn decode_frame(&mut self, payload: &[u8]) -> Vec<i16> {
        let mut out = Vec::with_capacity(payload.len() * 2);
        for &b in payload {
            out.push(self.decode_sample(b & 0x0F));
            out.push(self.decode_sample(b >> 4));
        }
        out
    }
}
