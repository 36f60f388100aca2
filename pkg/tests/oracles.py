"""Reference implementations that share no code with the package.

``collatz_native`` steps whole arrays of start values with numpy uint64
arithmetic; ``schoolbook_*`` work on 16-bit limbs widened to Python ints.
"""

import numpy as np

RSA_100 = (
    "1522605027922533360535618378132637429718068114961380688657908494580122963258952897654000350692006139"
)

LIMB = 16
BASE = 1 << LIMB


def collatz_native(starts):
    """(halvings, odd_steps, max_bit_length, stopping_time) arrays for each start."""
    x = np.asarray(starts, dtype=np.uint64).copy()
    n = len(x)
    halvings = np.zeros(n, dtype=np.int64)
    odd = np.zeros(n, dtype=np.int64)
    peak = x.copy()
    live = x != 1
    while live.any():
        idx = np.nonzero(live)[0]
        v = x[idx]
        is_odd = (v & np.uint64(1)).astype(bool)
        nxt = np.where(is_odd, v * np.uint64(3) + np.uint64(1), v >> np.uint64(1))
        assert int(nxt.max()) < 2**62, "oracle would overflow"
        x[idx] = nxt
        odd[idx] += is_odd
        halvings[idx] += ~is_odd
        peak[idx] = np.maximum(peak[idx], nxt)
        live[idx] = nxt != 1
    max_bits = np.array([int(p).bit_length() for p in peak])
    return halvings, odd, max_bits, halvings + odd


def collatz_int(x):
    """Same statistics for one arbitrary-size Python int."""
    h = o = 0
    peak = x.bit_length()
    while x != 1:
        if x & 1:
            x = 3 * x + 1
            o += 1
            peak = max(peak, x.bit_length())
        else:
            x >>= 1
            h += 1
    return h, o, peak, h + o


def limbs_from_lsb_text(text):
    return [int(text[i : i + LIMB][::-1], 2) for i in range(0, len(text), LIMB)]


def limbs_to_lsb_text(limbs):
    text = "".join(format(l, f"0{LIMB}b")[::-1] for l in limbs)
    return text.rstrip("0")


def schoolbook_add(a, b):
    out = []
    carry = 0
    for i in range(max(len(a), len(b))):
        s = (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) + carry
        out.append(s % BASE)
        carry = s // BASE
    if carry:
        out.append(carry)
    return out


def schoolbook_mul_small(a, k):
    out = []
    carry = 0
    for limb in a:
        t = limb * k + carry
        out.append(t % BASE)
        carry = t // BASE
    while carry:
        out.append(carry % BASE)
        carry //= BASE
    return out


def schoolbook_halve(a):
    out = []
    for i, limb in enumerate(a):
        hi = (a[i + 1] & 1) << (LIMB - 1) if i + 1 < len(a) else 0
        out.append((limb >> 1) | hi)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out
