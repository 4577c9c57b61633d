//! Laboratory for transcoding steganography in RTP voice streams.
//!
//! A 64 kbit/s G.711 stream is covertly transcoded to 32 kbit/s G.726 while
//! every externally visible RTP header field (payload type, payload length,
//! sequence numbers, timestamps, SSRC) is left untouched; the reclaimed half
//! of each payload carries a hidden byte stream. The crate bundles the
//! codecs, the embed/extract/restore packet engine, a deterministic call
//! simulator with wiretap points, and histogram-based traffic analysis for
//! playing the warden side.

pub mod audio;
pub mod codec;
pub mod rtp;
pub mod sim;
pub mod steg;
pub mod synth;
pub mod warden;
