"""Reference 32 kbit/s ADPCM (G.726-32 / G.721) codec, transcribed from the
classic public-domain CCITT reference code (Sun Microsystems g72x.c/g721.c).

C `short` truncation and arithmetic-shift semantics are preserved exactly so
this module can serve as an independent bit-exact oracle for the Rust port.
Runs offline only; never shipped as part of the library.
"""

POWER2 = [1, 2, 4, 8, 0x10, 0x20, 0x40, 0x80,
          0x100, 0x200, 0x400, 0x800, 0x1000, 0x2000, 0x4000]
QTAB_721 = [-124, 80, 178, 246, 300, 349, 400]
DQLNTAB = [-2048, 4, 135, 213, 273, 323, 373, 425,
           425, 373, 323, 273, 213, 135, 4, -2048]
WITAB = [-12, 18, 41, 64, 112, 198, 355, 1122,
         1122, 355, 198, 112, 64, 41, 18, -12]
FITAB = [0, 0, 0, 0x200, 0x200, 0x200, 0x600, 0xE00,
         0xE00, 0x600, 0x200, 0x200, 0x200, 0, 0, 0]


def s16(x):
    """Truncate to C `short` (16-bit two's complement)."""
    x &= 0xFFFF
    return x - 0x10000 if x & 0x8000 else x


def quan(val, table):
    for i, t in enumerate(table):
        if val < t:
            return i
    return len(table)


def fmult(an, srn):
    anmag = an if an > 0 else (-an) & 0x1FFF
    anexp = quan(anmag, POWER2) - 6
    if anmag == 0:
        anmant = 32
    elif anexp >= 0:
        anmant = anmag >> anexp
    else:
        anmant = anmag << -anexp
    wanexp = anexp + ((srn >> 6) & 0xF) - 13
    wanmant = (anmant * (srn & 0x3F) + 0x30) >> 4
    if wanexp >= 0:
        retval = (wanmant << wanexp) & 0x7FFF
    else:
        retval = wanmant >> -wanexp
    return -retval if (an ^ srn) < 0 else retval


class G726State:
    def __init__(self):
        self.yl = 34816            # C long
        self.yu = 544              # C short
        self.dms = 0
        self.dml = 0
        self.ap = 0
        self.a = [0, 0]
        self.b = [0, 0, 0, 0, 0, 0]
        self.pk = [0, 0]
        self.dq = [32, 32, 32, 32, 32, 32]
        self.sr = [32, 32]
        self.td = 0


def predictor_zero(st):
    sezi = fmult(st.b[0] >> 2, st.dq[0])
    for i in range(1, 6):
        sezi += fmult(st.b[i] >> 2, st.dq[i])
    return sezi


def predictor_pole(st):
    return fmult(st.a[1] >> 2, st.sr[1]) + fmult(st.a[0] >> 2, st.sr[0])


def step_size(st):
    if st.ap >= 256:
        return st.yu
    y = st.yl >> 6
    dif = st.yu - y
    al = st.ap >> 2
    if dif > 0:
        y += (dif * al) >> 6
    elif dif < 0:
        y += (dif * al + 0x3F) >> 6
    return y


def quantize(d, y, table):
    dqm = abs(d)
    exp = quan(dqm >> 1, POWER2)
    mant = ((dqm << 7) >> exp) & 0x7F
    dl = (exp << 7) + mant
    dln = dl - (y >> 2)
    i = quan(dln, table)
    size = len(table)
    if d < 0:
        return (size << 1) + 1 - i
    if i == 0:
        return (size << 1) + 1
    return i


def reconstruct(sign, dqln, y):
    dql = s16(dqln + (y >> 2))
    if dql < 0:
        return -0x8000 if sign else 0
    dex = (dql >> 7) & 15
    dqt = 128 + (dql & 127)
    dq = (dqt << 7) >> (14 - dex)
    return dq - 0x8000 if sign else dq


def update(code_size, y, wi, fi, dq, sr, dqsez, st):
    a2p = 0
    pk0 = 1 if dqsez < 0 else 0
    mag = dq & 0x7FFF

    # TRANS: tone / transition detector (short truncation of thr1 intended)
    ylint = st.yl >> 15
    ylfrac = (st.yl >> 10) & 0x1F
    thr1 = s16((32 + ylfrac) << ylint)
    thr2 = s16(thr1 if thr1 < 0x40000 else 0x40000)
    dqthr = s16((thr2 + (thr2 >> 1)) >> 1)
    if st.td == 0:
        tr = 0
    elif mag <= dqthr:
        tr = 0
    else:
        tr = 1

    # FUNCTW & FILTD & DELAY, LIMB
    st.yu = s16(y + ((wi - y) >> 5))
    if st.yu < 544:
        st.yu = 544
    elif st.yu > 5120:
        st.yu = 5120

    # FILTE & DELAY (yl is a C long)
    st.yl += st.yu + ((-st.yl) >> 6)

    if tr == 1:
        st.a[0] = 0
        st.a[1] = 0
        for i in range(6):
            st.b[i] = 0
    else:
        # UPA2
        pks1 = pk0 ^ st.pk[0]
        a2p = s16(st.a[1] - (st.a[1] >> 7))
        if dqsez != 0:
            fa1 = s16(st.a[0] if pks1 else -st.a[0])
            if fa1 < -8191:
                a2p = s16(a2p - 0x100)
            elif fa1 > 8191:
                a2p = s16(a2p + 0xFF)
            else:
                a2p = s16(a2p + (fa1 >> 5))

            if pk0 ^ st.pk[1]:
                # LIMC
                if a2p <= -12160:
                    a2p = -12288
                elif a2p >= 12416:
                    a2p = 12288
                else:
                    a2p = s16(a2p - 0x80)
            elif a2p <= -12416:
                a2p = -12288
            elif a2p >= 12160:
                a2p = 12288
            else:
                a2p = s16(a2p + 0x80)

        # TRIGB & DELAY
        st.a[1] = a2p

        # UPA1
        st.a[0] = s16(st.a[0] - (st.a[0] >> 8))
        if dqsez != 0:
            if pks1 == 0:
                st.a[0] = s16(st.a[0] + 192)
            else:
                st.a[0] = s16(st.a[0] - 192)

        # LIMD
        a1ul = s16(15360 - a2p)
        if st.a[0] < -a1ul:
            st.a[0] = -a1ul
        elif st.a[0] > a1ul:
            st.a[0] = a1ul

        # UPB
        for i in range(6):
            if code_size == 5:
                st.b[i] = s16(st.b[i] - (st.b[i] >> 9))
            else:
                st.b[i] = s16(st.b[i] - (st.b[i] >> 8))
            if dq & 0x7FFF:
                if (dq ^ st.dq[i]) >= 0:
                    st.b[i] = s16(st.b[i] + 128)
                else:
                    st.b[i] = s16(st.b[i] - 128)

    for i in range(5, 0, -1):
        st.dq[i] = st.dq[i - 1]
    # FLOAT A: 4-bit exponent, 6-bit mantissa floating point of dq
    if mag == 0:
        st.dq[0] = 0x20 if dq >= 0 else s16(0xFC20)
    else:
        exp = quan(mag, POWER2)
        if dq >= 0:
            st.dq[0] = s16((exp << 6) + ((mag << 6) >> exp))
        else:
            st.dq[0] = s16((exp << 6) + ((mag << 6) >> exp) - 0x400)

    st.sr[1] = st.sr[0]
    # FLOAT B
    if sr == 0:
        st.sr[0] = 0x20
    elif sr > 0:
        exp = quan(sr, POWER2)
        st.sr[0] = s16((exp << 6) + ((sr << 6) >> exp))
    elif sr > -32768:
        mag2 = -sr
        exp = quan(mag2, POWER2)
        st.sr[0] = s16((exp << 6) + ((mag2 << 6) >> exp) - 0x400)
    else:
        st.sr[0] = s16(0xFC20)

    st.pk[1] = st.pk[0]
    st.pk[0] = pk0

    # TONE
    if tr == 1:
        st.td = 0
    elif a2p < -11776:
        st.td = 1
    else:
        st.td = 0

    # Adaptation speed control
    st.dms = s16(st.dms + ((fi - st.dms) >> 5))
    st.dml = s16(st.dml + (((fi << 2) - st.dml) >> 7))

    if tr == 1:
        st.ap = 256
    elif y < 1536:
        st.ap = s16(st.ap + ((0x200 - st.ap) >> 4))
    elif st.td == 1:
        st.ap = s16(st.ap + ((0x200 - st.ap) >> 4))
    elif abs((st.dms << 2) - st.dml) >= (st.dml >> 3):
        st.ap = s16(st.ap + ((0x200 - st.ap) >> 4))
    else:
        st.ap = s16(st.ap + ((-st.ap) >> 4))


def encode_sample(sl, st):
    """16-bit linear PCM in, 4-bit I code out."""
    sl >>= 2  # 14-bit dynamic range

    sezi = s16(predictor_zero(st))
    sez = sezi >> 1
    se = s16((sezi + predictor_pole(st)) >> 1)

    d = s16(sl - se)

    y = step_size(st)
    i = quantize(d, y, QTAB_721)

    dq = s16(reconstruct(i & 8, DQLNTAB[i], y))

    sr = s16(se - (dq & 0x3FFF)) if dq < 0 else s16(se + dq)

    dqsez = s16(sr + sez - se)

    update(4, y, WITAB[i] << 5, FITAB[i], dq, sr, dqsez, st)
    return i


def decode_sample(i, st):
    """4-bit I code in, 16-bit linear PCM out (saturated)."""
    i &= 0x0F
    sezi = s16(predictor_zero(st))
    sez = sezi >> 1
    sei = s16(sezi + predictor_pole(st))
    se = sei >> 1

    y = step_size(st)

    dq = s16(reconstruct(i & 0x08, DQLNTAB[i], y))

    sr = s16(se - (dq & 0x3FFF)) if dq < 0 else s16(se + dq)

    dqsez = s16(sr - se + sez)

    update(4, y, WITAB[i] << 5, FITAB[i], dq, sr, dqsez, st)

    out = sr << 2
    if out > 32767:
        out = 32767
    elif out < -32768:
        out = -32768
    return out


def encode_block(samples):
    st = G726State()
    return [encode_sample(s, st) for s in samples]


def decode_block(codes):
    st = G726State()
    return [decode_sample(c, st) for c in codes]
