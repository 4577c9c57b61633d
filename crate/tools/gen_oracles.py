#!/usr/bin/env python3
"""Generate frozen codec/network oracle data for the Rust test suite.

Writes Rust include files under crates/core/tests/data/. Everything here is
computed by the independent reference implementations in g711_ref.py and
g726_ref.py, then frozen; the Rust tests compare the production code against
these constants bit-for-bit.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import g711_ref
import g726_ref

OUT_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                       "..", "crates", "core", "tests", "data")

M64 = (1 << 64) - 1


def splitmix64(seed):
    state = seed & M64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & M64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M64
        z = z ^ (z >> 31)
        yield z


def rand_i16(seed, n):
    g = splitmix64(seed)
    out = []
    for _ in range(n):
        v = next(g) & 0xFFFF
        out.append(v - 0x10000 if v & 0x8000 else v)
    return out


def rand_nibbles(seed, n):
    g = splitmix64(seed)
    return [next(g) & 0xF for _ in range(n)]


def fmt_array(name, ty, values, per_line=16):
    lines = [f"pub static {name}: [{ty}; {len(values)}] = ["]
    for i in range(0, len(values), per_line):
        chunk = ", ".join(str(v) for v in values[i:i + per_line])
        lines.append(f"    {chunk},")
    lines.append("];\n")
    return "\n".join(lines)


def fmt_pairs(name, pairs, per_line=8):
    lines = [f"pub static {name}: [(i16, u8); {len(pairs)}] = ["]
    for i in range(0, len(pairs), per_line):
        chunk = ", ".join(f"({x}, {c})" for x, c in pairs[i:i + per_line])
        lines.append(f"    {chunk},")
    lines.append("];\n")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# STL-style companding (transcription of the planned production formulation)
# used only to cross-check against the independent nearest-level oracle.
# ---------------------------------------------------------------------------

def s16(x):
    x &= 0xFFFF
    return x - 0x10000 if x & 0x8000 else x


def stl_mu_encode(x):
    if x < 0:
        absno = ((~x) >> 2) + 33
        sign = 0
    else:
        absno = (x >> 2) + 33
        sign = 0x80
    if absno > 0x1FFF:
        absno = 0x1FFF
    i = absno >> 6
    segno = 1
    while i != 0:
        segno += 1
        i >>= 1
    high_nibble = 8 - segno
    low_nibble = 0xF - ((absno >> segno) & 0xF)
    return sign | (high_nibble << 4) | low_nibble


def stl_mu_decode(y):
    sign = -1 if y < 0x80 else 1
    mantissa = s16(~y)
    exponent = (mantissa >> 4) & 7
    segment = exponent + 1
    mantissa &= 0xF
    step = 4 << segment
    return sign * ((0x80 << exponent) + step * mantissa + step // 2 - 4 * 33)


def stl_a_encode(x):
    ix = ((~x) >> 4) if x < 0 else (x >> 4)
    if ix > 15:
        iexp = 1
        while ix > 16 + 15:
            ix >>= 1
            iexp += 1
        ix -= 16
        ix += iexp << 4
    if x >= 0:
        ix |= 0x80
    return ix ^ 0x55


def stl_a_decode(y):
    ix = (y ^ 0x55) & 0x7F
    iexp = ix >> 4
    mant = ix & 0xF
    if iexp > 0:
        mant += 16
    mant = (mant << 4) + 8
    if iexp > 1:
        mant <<= iexp - 1
    return mant if y > 127 else -mant


def cross_check_g711():
    mu_oracle_enc = g711_ref.mu_encode_table()
    a_oracle_enc = g711_ref.a_encode_table()
    mu_mism = []
    a_mism = []
    for x in range(-32768, 32768):
        if stl_mu_encode(x) != mu_oracle_enc[x & 0xFFFF]:
            mu_mism.append(x)
        if stl_a_encode(x) != a_oracle_enc[x & 0xFFFF]:
            a_mism.append(x)
    for c in range(256):
        assert stl_mu_decode(c) == g711_ref.mu_decode(c), (c, stl_mu_decode(c))
        assert stl_a_decode(c) == g711_ref.a_decode(c), (c, stl_a_decode(c))
    print(f"g711 cross-check: mu encode mismatches {len(mu_mism)} "
          f"{mu_mism[:8]}, a-law mismatches {len(a_mism)} {a_mism[:8]}")
    return mu_oracle_enc, a_oracle_enc, mu_mism, a_mism


def boundary_pairs(enc_table):
    """(sample, code) at every code transition plus its predecessor."""
    pairs = []
    prev = enc_table[(-32768) & 0xFFFF]
    pairs.append((-32768, prev))
    for x in range(-32767, 32768):
        c = enc_table[x & 0xFFFF]
        if c != prev:
            pairs.append((x - 1, prev))
            pairs.append((x, c))
            prev = c
    pairs.append((32767, enc_table[32767]))
    return pairs


def gen_g711(mu_enc, a_enc):
    mu_dec = [g711_ref.mu_decode(c) for c in range(256)]
    a_dec = [g711_ref.a_decode(c) for c in range(256)]
    mu_pairs = boundary_pairs(mu_enc)
    a_pairs = boundary_pairs(a_enc)
    parts = [
        "// Frozen G.711 companding oracle data. Generated by tools/gen_oracles.py;",
        "// do not edit by hand. Decode tables are the standard expansion values",
        "// (both mu-law zero codes decode to 0 here). Boundary pairs sample every",
        "// encoder code transition.",
        "",
        fmt_array("MU_DECODE_ORACLE", "i16", mu_dec),
        fmt_array("A_DECODE_ORACLE", "i16", a_dec),
        fmt_pairs("MU_BOUNDARY_PAIRS", mu_pairs),
        fmt_pairs("A_BOUNDARY_PAIRS", a_pairs),
    ]
    path = os.path.join(OUT_DIR, "g711_oracle.rs")
    with open(path, "w") as f:
        f.write("\n".join(parts))
    print(f"wrote {path}: {len(mu_pairs)} mu pairs, {len(a_pairs)} a pairs")


def gen_g726():
    zeros = [0] * 512
    rnd = rand_i16(0x5EED1234ABCD0001, 2048)
    tri = []
    for i in range(1024):
        ph = i % 64
        v = ph * 500 if ph < 16 else (16 - (ph - 16)) * 500 if ph < 48 else (ph - 64) * 500
        tri.append(v)
    burst = []
    for i in range(512):
        if 10 <= i < 20:
            burst.append(12000)
        elif 100 <= i < 120:
            burst.append(-12000)
        elif 300 <= i < 310:
            burst.append(30000 if i % 2 == 0 else -30000)
        else:
            burst.append(0)

    vectors = []
    for name, samples in [("ZERO", zeros), ("RANDOM", rnd),
                          ("TRIANGLE", tri), ("BURST", burst)]:
        codes = g726_ref.encode_block(samples)
        decoded = g726_ref.decode_block(codes)
        vectors.append((name, samples, codes, decoded))

    nib = rand_nibbles(0xC0DE000000000002, 1024)
    nib_dec = g726_ref.decode_block(nib)

    parts = [
        "// Frozen G.726-32 (ADPCM) oracle vectors. Generated by",
        "// tools/gen_oracles.py from the independent reference transcription in",
        "// tools/g726_ref.py; do not edit by hand. All runs start from the reset",
        "// coder state.",
        "",
    ]
    for name, samples, codes, decoded in vectors:
        parts.append(fmt_array(f"G726_{name}_INPUT", "i16", samples))
        parts.append(fmt_array(f"G726_{name}_CODES", "u8", codes))
        parts.append(fmt_array(f"G726_{name}_DECODED", "i16", decoded))
    parts.append(fmt_array("G726_NIBBLE_STREAM", "u8", nib))
    parts.append(fmt_array("G726_NIBBLE_DECODED", "i16", nib_dec))

    path = os.path.join(OUT_DIR, "g726_oracle.rs")
    with open(path, "w") as f:
        f.write("\n".join(parts))
    total = sum(len(s) for _, s, _, _ in vectors)
    print(f"wrote {path}: {total} encode samples + 1024 decode-only nibbles")
    print(f"  g726 zero-input first 8 codes: {vectors[0][2][:8]}")


def silence_chain_stats():
    zeros = [0] * 1024
    for law, enc, dec in [("mu", stl_mu_encode, stl_mu_decode),
                          ("a", stl_a_encode, stl_a_decode)]:
        g711_bytes = [enc(x) for x in zeros]
        pcm = [dec(c) for c in g711_bytes]
        codes = g726_ref.encode_block(pcm)
        out = g726_ref.decode_block(codes)
        restored = [dec(enc(x)) for x in out]
        print(f"silence chain [{law}]: g711 byte {g711_bytes[0]:#x}, "
              f"max |g726 out| = {max(abs(v) for v in out)}, "
              f"max |restored| = {max(abs(v) for v in restored)}")


def udp_checksum_example():
    src = [192, 168, 1, 10]
    dst = [192, 168, 2, 20]
    sport, dport = 16384, 5004
    payload = b"RTPDATA!"
    udp_len = 8 + len(payload)
    seg = bytes([sport >> 8, sport & 0xFF, dport >> 8, dport & 0xFF,
                 udp_len >> 8, udp_len & 0xFF, 0, 0]) + payload
    pseudo = bytes(src) + bytes(dst) + bytes([0, 17, udp_len >> 8, udp_len & 0xFF])
    data = pseudo + seg
    if len(data) % 2:
        data += b"\x00"
    total = 0
    for i in range(0, len(data), 2):
        total += (data[i] << 8) | data[i + 1]
    while total > 0xFFFF:
        total = (total & 0xFFFF) + (total >> 16)
    csum = ~total & 0xFFFF
    if csum == 0:
        csum = 0xFFFF
    parts = [
        "// Frozen UDP checksum worked example. Generated by tools/gen_oracles.py;",
        "// do not edit by hand.",
        "",
        f"pub static UDP_EXAMPLE_SRC: [u8; 4] = {src!r};".replace("'", ""),
        f"pub static UDP_EXAMPLE_DST: [u8; 4] = {dst!r};".replace("'", ""),
        f"pub static UDP_EXAMPLE_SPORT: u16 = {sport};",
        f"pub static UDP_EXAMPLE_DPORT: u16 = {dport};",
        f'pub static UDP_EXAMPLE_PAYLOAD: &[u8] = b"RTPDATA!";',
        f"pub static UDP_EXAMPLE_CHECKSUM: u16 = {csum:#06x};",
        "",
    ]
    path = os.path.join(OUT_DIR, "net_oracle.rs")
    with open(path, "w") as f:
        f.write("\n".join(parts))
    print(f"wrote {path}: checksum {csum:#06x}")


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    mu_enc, a_enc, mu_mism, a_mism = cross_check_g711()
    if mu_mism or a_mism:
        print("WARNING: STL-style companding disagrees with nearest-level oracle",
              file=sys.stderr)
    gen_g711(mu_enc, a_enc)
    gen_g726()
    silence_chain_stats()
    udp_checksum_example()


if __name__ == "__main__":
    main()
