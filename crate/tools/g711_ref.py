"""Reference G.711 companding oracle built from the segment geometry.

Decode tables come from the closed-form segment expansion. The reference
encoder places each sample in its quantization interval directly from the
closed-form cell lower bounds (independent of the bias/shift tricks used by
production code):

  mu-law, 16-bit scale, positive x: cell (e, m) covers
      [((8m + 128) << e) - 132, ((8m + 136) << e) - 132)    (clamped at 0)
  A-law, 16-bit scale, positive x: cell (e, m) covers
      [16m, 16m + 16)                      for e = 0
      [(16m + 256) << (e-1), + width)      for e >= 1

Negative samples use the mirrored intervals (magnitude - 1 falls in the
positive cell), which matches the standard's decision values. Offline oracle
only.
"""

import bisect


def mu_decode(code):
    """ITU mu-law expansion, 16-bit scale. Codes 0x7F and 0xFF both yield 0."""
    u = ~code & 0xFF
    e = (u >> 4) & 7
    m = u & 0xF
    mag = (((m << 3) + 0x84) << e) - 0x84
    return -mag if u & 0x80 else mag


def a_decode(code):
    """ITU A-law expansion, 16-bit scale. All 256 levels are distinct."""
    a = code ^ 0x55
    e = (a >> 4) & 7
    m = a & 0xF
    if e == 0:
        mag = (m << 4) + 8
    else:
        mag = ((m << 4) + 0x108) << (e - 1)
    return mag if a & 0x80 else -mag


def _mu_cell_bounds():
    """Lower bound of each positive mu-law cell, index = 16*e + m."""
    bounds = []
    for e in range(8):
        for m in range(16):
            lb = ((8 * m + 128) << e) - 132
            bounds.append(max(lb, 0))
    return bounds


def _a_cell_bounds():
    """Lower bound of each positive A-law cell, index = 16*e + m."""
    bounds = []
    for e in range(8):
        for m in range(16):
            if e == 0:
                bounds.append(16 * m)
            else:
                bounds.append((16 * m + 256) << (e - 1))
    return bounds


def _mu_code(e, m, positive):
    c = ((7 - e) << 4) | (0xF - m)
    return c | 0x80 if positive else c


def _a_code(e, m, positive):
    c = (e << 4) | m
    if positive:
        c |= 0x80
    return c ^ 0x55


def _encoder_from_bounds(bounds, code_of):
    """encode[x] for every 16-bit x via interval membership."""
    table = [0] * 65536
    for x in range(-32768, 32768):
        mag = x if x >= 0 else -x - 1
        cell = bisect.bisect_right(bounds, mag) - 1
        if cell < 0:
            cell = 0
        e, m = divmod(cell, 16)
        table[x & 0xFFFF] = code_of(e, m, x >= 0)
    return table


def mu_encode_table():
    return _encoder_from_bounds(_mu_cell_bounds(), _mu_code)


def a_encode_table():
    return _encoder_from_bounds(_a_cell_bounds(), _a_code)
