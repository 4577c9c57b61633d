#!/usr/bin/env python3
"""Independent voice-quality oracle.

Runs the bundled speech fixtures through the reference Python codecs along
the same chain the Rust pipeline uses for a covert call:

    G.711 encode -> G.711 decode -> G.726 encode -> G.726 decode
    -> G.711 encode -> G.711 decode

and reports the segmental SNR of the result against the G.711-only path,
using the same definition as the Rust side: 80-sample windows, windows whose
reference mean square is below 10000 skipped, per-window SNR clamped to
[-10, 35] dB, arithmetic mean over the surviving windows.

The printed values back the frozen acceptance threshold for transcoding
quality.
"""

import math
import struct
import sys
import wave
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import g711_ref
import g726_ref

WINDOW = 80
VOICED_MEAN_SQUARE = 10_000.0
CLAMP = (-10.0, 35.0)


def read_wav(path):
    with wave.open(str(path), "rb") as w:
        assert w.getnchannels() == 1, "fixtures are mono"
        assert w.getsampwidth() == 2, "fixtures are 16-bit"
        assert w.getframerate() == 8000, "fixtures are 8 kHz"
        raw = w.readframes(w.getnframes())
    return list(struct.unpack(f"<{len(raw) // 2}h", raw))


def seg_snr(reference, degraded):
    acc, windows = 0.0, 0
    for w in range(0, len(reference) - WINDOW + 1, WINDOW):
        ref = reference[w : w + WINDOW]
        deg = degraded[w : w + WINDOW]
        sig = sum(float(r) * r for r in ref)
        noise = sum((float(r) - d) ** 2 for r, d in zip(ref, deg))
        if sig / WINDOW < VOICED_MEAN_SQUARE:
            continue
        snr = CLAMP[1] if noise == 0 else min(max(10 * math.log10(sig / noise), CLAMP[0]), CLAMP[1])
        acc += snr
        windows += 1
    assert windows > 0, "fixture has no voiced windows"
    return acc / windows


def mu_decode_bijective(code):
    """The pipeline's mu-law expansion: code 0x7F yields the centre of its
    encoder cell (-2) instead of the nominal 0, so that every code
    round-trips to itself. Mirrored here because this oracle models the
    deployed chain, not the bare table."""
    return -2 if code == 0x7F else g711_ref.mu_decode(code)


def chain(samples, law):
    if law == "mu":
        enc_table, dec = g711_ref.mu_encode_table(), mu_decode_bijective
    else:
        enc_table, dec = g711_ref.a_encode_table(), g711_ref.a_decode

    reference = [dec(enc_table[s & 0xFFFF]) for s in samples]

    enc_state = g726_ref.G726State()
    dec_state = g726_ref.G726State()
    degraded = []
    for s in reference:
        code = g726_ref.encode_sample(s, enc_state)
        pcm = g726_ref.decode_sample(code, dec_state)
        degraded.append(dec(enc_table[pcm & 0xFFFF]))
    return reference, degraded


def main():
    fixtures = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("fixtures")
    results = []
    for name in ("speech_01.wav", "speech_02.wav"):
        samples = read_wav(fixtures / name)
        for law in ("mu", "a"):
            reference, degraded = chain(samples, law)
            snr = seg_snr(reference, degraded)
            results.append((name, law, snr))
            print(f"seg-snr {snr:.4f} dB  {name},{law}")
    floor = min(r[2] for r in results)
    print(f"minimum over fixtures and laws: {floor:.4f} dB")


if __name__ == "__main__":
    main()
