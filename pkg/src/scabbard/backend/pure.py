"""Numpy implementation of the multiplication kernels.

All arithmetic lives in 16-bit lanes: values are carried as int64 and
masked to 16 bits at every step boundary, which is bit-identical to native
uint16 wraparound. Exact divisions during Toom-Cook interpolation follow
the odd-inverse-multiply-then-shift technique, so a Toom-4 layer costs 3
bits of headroom and a Toom-3 layer costs 1; results are therefore correct
modulo 2^(16 - shifts), which every parameter set stays below.

The compiled backend (_core) mirrors these functions and must agree with
them bit for bit.
"""

import numpy as np

MASK = 0xFFFF
INV3 = 43691    # 3^-1 mod 2^16
INV9 = 36409    # 9^-1 mod 2^16
INV15 = 61167   # 15^-1 mod 2^16

# When set, interpolation asserts every value fed to a logical shift has the
# shifted-out bits clear (the exact-division precondition). Enabled by tests.
CHECK_SHIFTS = False


def _shift(t: np.ndarray, w: int) -> np.ndarray:
    if CHECK_SHIFTS:
        assert not np.any(t & ((1 << w) - 1)), "inexact division in interpolation"
    return t >> w


def conv16(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Linear convolution of two equal-length polys, mod 2^16."""
    a = np.asarray(a, dtype=np.int64) & MASK
    b = np.asarray(b, dtype=np.int64) & MASK
    return np.convolve(a, b) & MASK


def conv16_batch(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise linear convolution of (..., m) stacks, mod 2^16."""
    m = a.shape[-1]
    out = np.zeros(a.shape[:-1] + (2 * m - 1,), dtype=np.int64)
    a = np.asarray(a, dtype=np.int64) & MASK
    b = np.asarray(b, dtype=np.int64) & MASK
    for i in range(m):
        out[..., i:i + m] += a[..., i:i + 1] * b
    return out & MASK


# ---------------------------------------------------------------------------
# two-layer Karatsuba over 64 coefficients (16-coefficient schoolbook base)


def kara64_eval(a: np.ndarray) -> np.ndarray:
    """Split (..., 64) operands into the 9 Karatsuba pieces of 16 coeffs."""
    a = np.asarray(a, dtype=np.int64) & MASK
    half = np.stack([a[..., :32], a[..., 32:], (a[..., :32] + a[..., 32:]) & MASK],
                    axis=-2)                                    # (..., 3, 32)
    quarter = np.stack(
        [half[..., :16], half[..., 16:], (half[..., :16] + half[..., 16:]) & MASK],
        axis=-2)                                                # (..., 3, 3, 16)
    return quarter.reshape(a.shape[:-1] + (9, 16))


def kara64_basemul_sum(ea: np.ndarray, eb: np.ndarray) -> np.ndarray:
    """Multiply piece stacks (k, 9, 16) pairwise and sum over the first axis.

    This is the accumulator of the lazy-interpolation inner product: the 9
    evaluated sub-products of every vector term are added up and the
    recombination below runs once on the totals.
    """
    prods = conv16_batch(ea, eb)        # (k, 9, 31)
    return prods.sum(axis=0) & MASK


def kara64_interp(w: np.ndarray) -> np.ndarray:
    """Recombine the 9 sub-products (..., 9, 31) into (..., 127)."""
    w = np.asarray(w, dtype=np.int64)
    groups = np.zeros(w.shape[:-2] + (3, 63), dtype=np.int64)
    groups[..., :, 0:31] += w[..., 0::3, :]
    groups[..., :, 32:63] += w[..., 1::3, :]
    groups[..., :, 16:47] += w[..., 2::3, :] - w[..., 0::3, :] - w[..., 1::3, :]
    groups &= MASK
    out = np.zeros(w.shape[:-2] + (127,), dtype=np.int64)
    out[..., 0:63] += groups[..., 0, :]
    out[..., 64:127] += groups[..., 1, :]
    out[..., 32:95] += groups[..., 2, :] - groups[..., 0, :] - groups[..., 1, :]
    return out & MASK


def mul64(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """64x64 product (127 coefficients), exact in the 16-bit lane."""
    ea = kara64_eval(a)
    eb = kara64_eval(b)
    return kara64_interp(conv16_batch(ea, eb))


# ---------------------------------------------------------------------------
# Toom-Cook layers. Evaluation points: 0, 1, -1, 2 and infinity, plus the
# half points (scaled by 8) for the 4-way split; the half points keep every
# exact division within the 3-bit budget.


def toom4_eval(limbs: np.ndarray) -> np.ndarray:
    """(..., 4, L) limbs -> (..., 7, L) evaluations."""
    limbs = np.asarray(limbs, dtype=np.int64) & MASK
    l0, l1, l2, l3 = (limbs[..., i, :] for i in range(4))
    return np.stack([
        l0,
        (l0 + l1 + l2 + l3) & MASK,
        (l0 - l1 + l2 - l3) & MASK,
        (l0 + 2 * l1 + 4 * l2 + 8 * l3) & MASK,
        (8 * l0 + 4 * l1 + 2 * l2 + l3) & MASK,
        (8 * l0 - 4 * l1 + 2 * l2 - l3) & MASK,
        l3,
    ], axis=-2)


def toom4_interp(w: np.ndarray, limb: int) -> np.ndarray:
    """Invert the 7-point evaluation; sub-products are (..., 7, 2L-1).

    Shifts: 1 + 3 on the even part, 1 + 2 + 1 interleaved on the odd part,
    never chained deeper than 3 bits total.
    """
    w = np.asarray(w, dtype=np.int64)
    w0, w1, w2, w3, w4, w5, w6 = (w[..., i, :] for i in range(7))
    e1 = (_shift((w1 + w2) & MASK, 1) - w0 - w6) & MASK            # c2 + c4
    e2 = _shift((w4 + w5 - 128 * w0 - 2 * w6) & MASK, 3)           # 4c2 + c4
    c2 = ((e2 - e1) * INV3) & MASK
    c4 = (e1 - c2) & MASK
    s1 = _shift((w1 - w2) & MASK, 1)                               # c1+c3+c5
    s2 = _shift((w4 - w5) & MASK, 2)                               # 16c1+4c3+c5
    s3 = _shift((w3 - w0 - 4 * c2 - 16 * c4 - 64 * w6) & MASK, 1)  # c1+4c3+16c5
    c3 = ((17 * s1 - s2 - s3) * INV9) & MASK
    u = (s1 - c3) & MASK
    v = ((s2 - s3) * INV15) & MASK
    c1 = _shift((u + v) & MASK, 1)
    c5 = _shift((u - v) & MASK, 1)
    out = np.zeros(w.shape[:-2] + (8 * limb - 1,), dtype=np.int64)
    for i, c in enumerate((w0, c1, c2, c3, c4, c5, w6)):
        out[..., i * limb:i * limb + 2 * limb - 1] += c
    return out & MASK


def toom3_eval(limbs: np.ndarray) -> np.ndarray:
    """(..., 3, L) limbs -> (..., 5, L) evaluations."""
    limbs = np.asarray(limbs, dtype=np.int64) & MASK
    l0, l1, l2 = (limbs[..., i, :] for i in range(3))
    return np.stack([
        l0,
        (l0 + l1 + l2) & MASK,
        (l0 - l1 + l2) & MASK,
        (l0 + 2 * l1 + 4 * l2) & MASK,
        l2,
    ], axis=-2)


def toom3_interp(w: np.ndarray, limb: int) -> np.ndarray:
    """Invert the 5-point evaluation; single 1-bit shifts only."""
    w = np.asarray(w, dtype=np.int64)
    w0, w1, w2, w3, w4 = (w[..., i, :] for i in range(5))
    c2 = (_shift((w1 + w2) & MASK, 1) - w0 - w4) & MASK
    y = (w1 - w2) & MASK                                  # 2c1 + 2c3
    x = (w3 - w0 - 4 * c2 - 16 * w4) & MASK               # 2c1 + 8c3
    c3 = _shift(((x - y) * INV3) & MASK, 1)
    c1 = _shift((y - 2 * c3) & MASK, 1)
    out = np.zeros(w.shape[:-2] + (6 * limb - 1,), dtype=np.int64)
    for i, c in enumerate((w0, c1, c2, c3, w4)):
        out[..., i * limb:i * limb + 2 * limb - 1] += c
    return out & MASK


def mul256(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """256x256 product: Toom-4, then two Karatsuba layers, then schoolbook.

    Output is 511 coefficients, correct mod 2^13 in the 16-bit lane.
    """
    ea = toom4_eval(np.asarray(a, dtype=np.int64).reshape(4, 64))   # (7, 64)
    eb = toom4_eval(np.asarray(b, dtype=np.int64).reshape(4, 64))
    pa = kara64_eval(ea)                                            # (7, 9, 16)
    pb = kara64_eval(eb)
    w = kara64_interp(conv16_batch(pa, pb))                         # (7, 127)
    return toom4_interp(w, 64)
