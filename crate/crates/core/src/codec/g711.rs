//! G.711 companding (mu-law and A-law), shift-and-bias formulation.

use super::Law;

/// Compress one 16-bit linear sample to an 8-bit G.711 code.
pub fn encode(law: Law, sample: i16) -> u8 {
    match law {
        Law::Mu => encode_mu(sample),
        Law::A => encode_a(sample),
    }
}

/// Expand one 8-bit G.711 code back to a 16-bit linear sample.
pub fn decode(law: Law, code: u8) -> i16 {
    match law {
        Law::Mu => decode_mu(code),
        Law::A => decode_a(code),
    }
}

pub fn encode_frame(law: Law, samples: &[i16]) -> Vec<u8> {
    samples.iter().map(|&s| encode(law, s)).collect()
}

pub fn decode_frame(law: Law, payload: &[u8]) -> Vec<i16> {
    payload.iter().map(|&c| decode(law, c)).collect()
}

fn encode_mu(sample: i16) -> u8 {
    let x = sample as i32;
    // fold negatives with a one's complement so -1..-4 land in the same
    // quantizer cell geometry as 0..3, then add the mu-law bias of 33
    let (mut absno, sign) = if x < 0 {
        (((!x) >> 2) + 33, 0x00u8)
    } else {
        ((x >> 2) + 33, 0x80u8)
    };
    if absno > 0x1FFF {
        absno = 0x1FFF;
    }
    let mut i = absno >> 6;
    let mut segno = 1;
    while i != 0 {
        segno += 1;
        i >>= 1;
    }
    let high_nibble = (8 - segno) as u8;
    let low_nibble = (0xF - ((absno >> segno) & 0xF)) as u8;
    sign | (high_nibble << 4) | low_nibble
}

fn decode_mu(code: u8) -> i16 {
    // Both 0x7F and 0xFF nominally expand to zero. Returning the centre of
    // the 0x7F encoder cell [-4, -1] instead keeps encode(decode(c)) == c for
    // every code, which payload restoration relies on.
    if code == 0x7F {
        return -2;
    }
    let sign: i32 = if code < 0x80 { -1 } else { 1 };
    let mut mantissa = !(code as i32); // one's complement, sign-extended
    let exponent = (mantissa >> 4) & 7;
    let segment = exponent + 1;
    mantissa &= 0xF;
    let step = 4 << segment;
    (sign * ((0x80 << exponent) + step * mantissa + step / 2 - 4 * 33)) as i16
}

fn encode_a(sample: i16) -> u8 {
    let x = sample as i32;
    let mut ix = if x < 0 { (!x) >> 4 } else { x >> 4 };
    if ix > 15 {
        let mut iexp = 1;
        while ix > 16 + 15 {
            ix >>= 1;
            iexp += 1;
        }
        ix -= 16;
        ix += iexp << 4;
    }
    if x >= 0 {
        ix |= 0x80;
    }
    (ix as u8) ^ 0x55 // even-bit inversion for line transmission
}

fn decode_a(code: u8) -> i16 {
    let ix = (code ^ 0x55) & 0x7F;
    let iexp = (ix >> 4) as i32;
    let mut mant = (ix & 0xF) as i32;
    if iexp > 0 {
        mant += 16;
    }
    mant = (mant << 4) + 8;
    if iexp > 1 {
        mant <<= iexp - 1;
    }
    (if code > 127 { mant } else { -mant }) as i16
}
