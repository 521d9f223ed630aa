"""Scheme-specific multiplication trees.

Every product bottoms out in either the 256-coefficient base multiplier
(Toom-4 -> two Karatsuba layers -> 16x16 schoolbook) or, for Espada's
64-coefficient ring, a two-layer Karatsuba whose evaluated sub-products can
be accumulated across a whole inner product before interpolating once
(lazy interpolation). Florete wraps the base multiplier in one more
Karatsuba, Toom-3 or Toom-4 layer depending on the level.

Call counters for the base multiplications are kept here so tests can
account for the tree structure; they are plain module state, not
thread-safe.
"""

import numpy as np

from . import backend
from .backend import pure as formulas
from .params import Level, Scheme, SchemeParams
from .ring import reduce_ring

MASK16 = 0xFFFF

_impl = backend.get()


def active_backend() -> str:
    return "cython" if _impl.__name__.endswith("_core") else "python"


def set_backend(name: str) -> str:
    """Swap the kernel backend ('python', 'cython' or 'auto'); returns the choice."""
    global _impl
    _impl = backend.get(name)
    return active_backend()


counters = {"mul256": 0, "schoolbook": 0, "lazy_interp": 0}


def reset_counters() -> None:
    for key in counters:
        counters[key] = 0


# ---------------------------------------------------------------------------
# tree building blocks


def _mask(width: int) -> int:
    return (1 << width) - 1


def schoolbook(a: np.ndarray, b: np.ndarray, width: int = 16) -> np.ndarray:
    """Exact linear convolution of equal-length operands, mod 2^width."""
    counters["schoolbook"] += 1
    return _impl.conv16(a, b) & _mask(width)


def mul256(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """The 256x256 base multiplier; 511 coefficients, correct mod 2^13."""
    counters["mul256"] += 1
    return _impl.mul256(a, b)


def _submul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Sub-product dispatch inside Toom layers, by limb size."""
    size = a.shape[-1]
    if size == 256:
        return mul256(a, b)
    if size == 64:
        return karatsuba_mul(a, b, layers=2)
    return schoolbook(a, b)


def karatsuba_mul(a: np.ndarray, b: np.ndarray, width: int = 16,
                  layers: int = 1) -> np.ndarray:
    """Karatsuba with `layers` split levels over a schoolbook base."""
    if layers == 0:
        return schoolbook(a, b, width)
    m = a.shape[-1]
    if m % 2:
        raise ValueError("operand length must be even for a Karatsuba split")
    h = m // 2
    c0 = karatsuba_mul(a[:h], b[:h], 16, layers - 1)
    c1 = karatsuba_mul(a[h:], b[h:], 16, layers - 1)
    cm = karatsuba_mul((a[:h] + a[h:]) & MASK16, (b[:h] + b[h:]) & MASK16,
                       16, layers - 1)
    out = np.zeros(2 * m - 1, dtype=np.int64)
    out[: 2 * h - 1] += c0
    out[m: m + 2 * h - 1] += c1
    out[h: h + 2 * h - 1] += cm - c0 - c1
    return out & _mask(width)


def _kara_over_base(a, b, base):
    """One Karatsuba layer whose three sub-products use `base` directly."""
    h = a.shape[-1] // 2
    c0 = base(a[:h], b[:h])
    c1 = base(a[h:], b[h:])
    cm = base((a[:h] + a[h:]) & MASK16, (b[:h] + b[h:]) & MASK16)
    out = np.zeros(4 * h - 1, dtype=np.int64)
    out[: 2 * h - 1] += c0
    out[2 * h:] += c1
    out[h: 3 * h - 1] += cm - c0 - c1
    return out & MASK16


def toom4_mul(a: np.ndarray, b: np.ndarray, width: int = 16) -> np.ndarray:
    """Toom-Cook 4-way: 7 sub-products, result correct mod 2^(width-3)."""
    m = a.shape[-1]
    if m % 4:
        raise ValueError("operand length must be divisible by 4")
    limb = m // 4
    ea = formulas.toom4_eval(np.asarray(a, dtype=np.int64).reshape(4, limb))
    eb = formulas.toom4_eval(np.asarray(b, dtype=np.int64).reshape(4, limb))
    w = np.stack([_submul(ea[i], eb[i]) for i in range(7)])
    return formulas.toom4_interp(w, limb) & _mask(width)


def toom3_mul(a: np.ndarray, b: np.ndarray, width: int = 16) -> np.ndarray:
    """Toom-Cook 3-way: 5 sub-products, result correct mod 2^(width-1)."""
    m = a.shape[-1]
    if m % 3:
        raise ValueError("operand length must be divisible by 3")
    limb = m // 3
    ea = formulas.toom3_eval(np.asarray(a, dtype=np.int64).reshape(3, limb))
    eb = formulas.toom3_eval(np.asarray(b, dtype=np.int64).reshape(3, limb))
    w = np.stack([_submul(ea[i], eb[i]) for i in range(5)])
    return formulas.toom3_interp(w, limb) & _mask(width)


# ---------------------------------------------------------------------------
# ring products


def _tree_mul(p: SchemeParams, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Full-length product (2n-1 lanes) via the scheme's tree."""
    if p.scheme_id.scheme is Scheme.ESPADA:
        return _impl.mul64(a, b)
    if p.scheme_id.scheme is Scheme.SABLE:
        return mul256(a, b)
    level = p.scheme_id.level
    if level is Level.LOW:
        return _kara_over_base(a, b, mul256)
    if level is Level.MEDIUM:
        return toom3_mul(a, b)
    return toom4_mul(a, b)


def ring_mul(p: SchemeParams, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product in the scheme's quotient ring, masked to eps_q bits."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[-1] != p.n or b.shape[-1] != p.n:
        raise ValueError(f"operands must have {p.n} coefficients")
    return reduce_ring(_tree_mul(p, a, b), p.n, p.ring, p.eps_q)


def _lazy_rows(p: SchemeParams, rows: np.ndarray, svec_eval: np.ndarray,
               width: int) -> np.ndarray:
    """Espada inner product: accumulate evaluated sub-products, interpolate once."""
    ea = _impl.kara64_eval(rows)
    acc = _impl.kara64_basemul_sum(ea, svec_eval)
    counters["lazy_interp"] += 1
    prod = _impl.kara64_interp(acc)
    return reduce_ring(prod, p.n, p.ring, width)


def matvec_mul(p: SchemeParams, mat: np.ndarray, vec: np.ndarray,
               transpose: bool = False) -> np.ndarray:
    """Matrix-vector product over the module, mod q."""
    mat = np.asarray(mat, dtype=np.int64)
    vec = np.asarray(vec, dtype=np.int64)
    if mat.shape != (p.l, p.l, p.n) or vec.shape != (p.l, p.n):
        raise ValueError("matrix/vector dimensions do not match the parameter set")
    if p.scheme_id.scheme is Scheme.ESPADA:
        sv = _impl.kara64_eval(vec)
        rows = mat.transpose(1, 0, 2) if transpose else mat
        em = _impl.kara64_eval(rows.reshape(p.l * p.l, p.n))
        em = em.reshape(p.l, p.l, 9, 16)
        out = np.empty((p.l, p.n), dtype=np.int64)
        for i in range(p.l):
            acc = _impl.kara64_basemul_sum(em[i], sv)
            counters["lazy_interp"] += 1
            out[i] = reduce_ring(_impl.kara64_interp(acc), p.n, p.ring, p.eps_q)
        return out
    out = np.zeros((p.l, p.n), dtype=np.int64)
    for i in range(p.l):
        for j in range(p.l):
            poly = mat[j, i] if transpose else mat[i, j]
            out[i] += ring_mul(p, poly, vec[j])
    return out & _mask(p.eps_q)


def inner_prod(p: SchemeParams, bvec: np.ndarray, svec: np.ndarray) -> np.ndarray:
    """Vector inner product, mod p."""
    bvec = np.asarray(bvec, dtype=np.int64)
    svec = np.asarray(svec, dtype=np.int64)
    if bvec.shape != (p.l, p.n) or svec.shape != (p.l, p.n):
        raise ValueError("vector dimensions do not match the parameter set")
    if p.scheme_id.scheme is Scheme.ESPADA:
        sv = _impl.kara64_eval(svec)
        return _lazy_rows(p, bvec, sv, p.eps_p)
    acc = np.zeros(p.n, dtype=np.int64)
    for i in range(p.l):
        acc += ring_mul(p, bvec[i], svec[i])
    return acc & _mask(p.eps_p)
