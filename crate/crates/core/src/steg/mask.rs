//! Keyed payload masking and filler generation.
//!
//! Masking models lightweight SRTP-style encryption: a per-packet keystream
//! derived with SHA-256 in counter mode is XORed over the entire payload, so
//! applying the same operation twice restores the original bytes. Filler
//! bytes (the covert channel's padding once the message is exhausted) come
//! from the same generator under a dedicated key so they are never the
//! all-zero pattern an observer could spot.

use sha2::{Digest, Sha256};

pub const MASK_KEY_LEN: usize = 16;

const MASK_DOMAIN: &[u8; 8] = b"tsmask01";
const FILLER_DOMAIN: &[u8; 8] = b"tsfill01";

/// Deterministic keystream for one packet: SHA-256 blocks over
/// (domain, key, ssrc, packet index, block counter).
pub fn keystream(key: &[u8; MASK_KEY_LEN], ssrc: u32, packet_index: u64, len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len);
    let mut counter: u32 = 0;
    while out.len() < len {
        let mut h = Sha256::new();
        h.update(MASK_DOMAIN);
        h.update(key);
        h.update(ssrc.to_be_bytes());
        h.update(packet_index.to_be_bytes());
        h.update(counter.to_be_bytes());
        let block = h.finalize();
        let take = (len - out.len()).min(block.len());
        out.extend_from_slice(&block[..take]);
        counter += 1;
    }
    out
}

/// XOR the packet keystream over `data` in place. Involution: applying it
/// twice with the same parameters is the identity.
pub fn apply_mask(key: &[u8; MASK_KEY_LEN], ssrc: u32, packet_index: u64, data: &mut [u8]) {
    let ks = keystream(key, ssrc, packet_index, data.len());
    for (b, k) in data.iter_mut().zip(&ks) {
        *b ^= k;
    }
}

/// Derive the filler key from the channel's filler seed.
pub fn filler_key(seed: u64) -> [u8; MASK_KEY_LEN] {
    let mut h = Sha256::new();
    h.update(FILLER_DOMAIN);
    h.update(seed.to_be_bytes());
    let digest = h.finalize();
    let mut key = [0u8; MASK_KEY_LEN];
    key.copy_from_slice(&digest[..MASK_KEY_LEN]);
    key
}

/// Pseudorandom filler for one packet's reclaimed region. Byte `j` of the
/// region always gets stream position `j`, so a partially used packet pads
/// with the same bytes a fully padded one would carry at those positions.
pub fn filler_block(key: &[u8; MASK_KEY_LEN], ssrc: u32, packet_index: u64, len: usize) -> Vec<u8> {
    keystream(key, ssrc, packet_index, len)
}

/// Parse a 32-hex-digit masking key.
pub fn key_from_hex(s: &str) -> Option<[u8; MASK_KEY_LEN]> {
    let bytes = hex::decode(s.trim()).ok()?;
    bytes.try_into().ok()
}
