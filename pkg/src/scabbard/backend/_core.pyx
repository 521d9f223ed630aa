# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled multiplication kernels.

Bit-for-bit equivalent to backend/pure.py: native uint16 lanes, the same
Toom-4 / Karatsuba / schoolbook pipeline and the same interpolation step
order, so results agree with the numpy fallback on every input.
"""

import numpy as np

ctypedef unsigned short u16
ctypedef unsigned int u32
ctypedef long long i64

cdef u32 INV3 = 43691u
cdef u32 INV9 = 36409u
cdef u32 INV15 = 61167u


cdef void sb16(const u16 *a, const u16 *b, u16 *out) noexcept nogil:
    cdef int i, j
    for i in range(31):
        out[i] = 0
    for i in range(16):
        for j in range(16):
            out[i + j] = <u16> (out[i + j] + <u32> a[i] * b[j])


cdef void kara64_eval_c(const u16 *a, u16 *pieces) noexcept nogil:
    # pieces laid out as 9 rows of 16: per 32-half group, (low, high, low+high)
    cdef u16 half[3][32]
    cdef int g, i
    for i in range(32):
        half[0][i] = a[i]
        half[1][i] = a[32 + i]
        half[2][i] = <u16> (a[i] + a[32 + i])
    for g in range(3):
        for i in range(16):
            pieces[(3 * g) * 16 + i] = half[g][i]
            pieces[(3 * g + 1) * 16 + i] = half[g][16 + i]
            pieces[(3 * g + 2) * 16 + i] = <u16> (half[g][i] + half[g][16 + i])


cdef void kara64_interp_c(const u16 *w, u16 *out) noexcept nogil:
    # w: 9 rows of 31; out: 127
    cdef u16 grp[3][63]
    cdef int g, i
    for g in range(3):
        for i in range(63):
            grp[g][i] = 0
        for i in range(31):
            grp[g][i] = <u16> (grp[g][i] + w[(3 * g) * 31 + i])
            grp[g][32 + i] = <u16> (grp[g][32 + i] + w[(3 * g + 1) * 31 + i])
            grp[g][16 + i] = <u16> (grp[g][16 + i] + w[(3 * g + 2) * 31 + i]
                                    - w[(3 * g) * 31 + i] - w[(3 * g + 1) * 31 + i])
    for i in range(127):
        out[i] = 0
    for i in range(63):
        out[i] = <u16> (out[i] + grp[0][i])
        out[64 + i] = <u16> (out[64 + i] + grp[1][i])
        out[32 + i] = <u16> (out[32 + i] + grp[2][i] - grp[0][i] - grp[1][i])


cdef void mul64_c(const u16 *a, const u16 *b, u16 *out) noexcept nogil:
    cdef u16 pa[144]
    cdef u16 pb[144]
    cdef u16 w[279]
    cdef int t
    kara64_eval_c(a, pa)
    kara64_eval_c(b, pb)
    for t in range(9):
        sb16(pa + 16 * t, pb + 16 * t, w + 31 * t)
    kara64_interp_c(w, out)


cdef void toom4_eval_c(const u16 *a, u16 *e) noexcept nogil:
    # a: 256 = 4 limbs of 64; e: 7 rows of 64
    cdef int i
    cdef u32 l0, l1, l2, l3
    for i in range(64):
        l0 = a[i]
        l1 = a[64 + i]
        l2 = a[128 + i]
        l3 = a[192 + i]
        e[i] = <u16> l0
        e[64 + i] = <u16> (l0 + l1 + l2 + l3)
        e[128 + i] = <u16> (l0 - l1 + l2 - l3)
        e[192 + i] = <u16> (l0 + 2 * l1 + 4 * l2 + 8 * l3)
        e[256 + i] = <u16> (8 * l0 + 4 * l1 + 2 * l2 + l3)
        e[320 + i] = <u16> (8 * l0 - 4 * l1 + 2 * l2 - l3)
        e[384 + i] = <u16> l3
    return


cdef void toom4_interp_c(const u16 *w, u16 *out) noexcept nogil:
    # w: 7 rows of 127; out: 511
    cdef int i, t
    cdef u32 w0, w1, w2, w3, w4, w5, w6, e1, e2, c2, c4, s1, s2, s3, c3, u, v, c1, c5
    cdef u16 cols[7]
    for i in range(511):
        out[i] = 0
    for i in range(127):
        w0 = w[i]
        w1 = w[127 + i]
        w2 = w[254 + i]
        w3 = w[381 + i]
        w4 = w[508 + i]
        w5 = w[635 + i]
        w6 = w[762 + i]
        e1 = ((<u16> (w1 + w2)) >> 1) - w0 - w6
        e2 = (<u16> (w4 + w5 - 128 * w0 - 2 * w6)) >> 3
        c2 = <u16> ((e2 - e1) * INV3)
        c4 = <u16> (e1 - c2)
        s1 = (<u16> (w1 - w2)) >> 1
        s2 = (<u16> (w4 - w5)) >> 2
        s3 = (<u16> (w3 - w0 - 4 * c2 - 16 * c4 - 64 * w6)) >> 1
        c3 = <u16> ((17 * s1 - s2 - s3) * INV9)
        u = <u16> (s1 - c3)
        v = <u16> ((s2 - s3) * INV15)
        c1 = (<u16> (u + v)) >> 1
        c5 = (<u16> (u - v)) >> 1
        cols[0] = <u16> w0
        cols[1] = <u16> c1
        cols[2] = <u16> c2
        cols[3] = <u16> c3
        cols[4] = <u16> c4
        cols[5] = <u16> c5
        cols[6] = <u16> w6
        for t in range(7):
            out[64 * t + i] = <u16> (out[64 * t + i] + cols[t])


cdef void mul256_c(const u16 *a, const u16 *b, u16 *out) noexcept nogil:
    cdef u16 ea[448]
    cdef u16 eb[448]
    cdef u16 w[889]
    cdef int t
    toom4_eval_c(a, ea)
    toom4_eval_c(b, eb)
    for t in range(7):
        mul64_c(ea + 64 * t, eb + 64 * t, w + 127 * t)
    toom4_interp_c(w, out)


# ---------------------------------------------------------------------------
# python-facing wrappers (int64 arrays in and out, like the pure backend)


cdef void _to_u16(const i64[::1] src, u16 *dst, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(n):
        dst[i] = <u16> src[i]


def conv16(a, b):
    """Linear convolution of two equal-length polys, mod 2^16."""
    cdef i64[::1] av = np.ascontiguousarray(a, dtype=np.int64)
    cdef i64[::1] bv = np.ascontiguousarray(b, dtype=np.int64)
    cdef Py_ssize_t m = av.shape[0]
    if bv.shape[0] != m:
        raise ValueError("operand lengths differ")
    out = np.zeros(2 * m - 1, dtype=np.int64)
    cdef i64[::1] ov = out
    cdef Py_ssize_t i, j
    with nogil:
        for i in range(m):
            for j in range(m):
                ov[i + j] = <i64> (<u16> (ov[i + j] + <u32> (<u16> av[i]) * (<u16> bv[j])))
    return out


def mul64(a, b):
    cdef i64[::1] av = np.ascontiguousarray(a, dtype=np.int64)
    cdef i64[::1] bv = np.ascontiguousarray(b, dtype=np.int64)
    if av.shape[0] != 64 or bv.shape[0] != 64:
        raise ValueError("mul64 expects 64 coefficients")
    cdef u16 ab[64]
    cdef u16 bb[64]
    cdef u16 ob[127]
    out = np.empty(127, dtype=np.int64)
    cdef i64[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        _to_u16(av, ab, 64)
        _to_u16(bv, bb, 64)
        mul64_c(ab, bb, ob)
        for i in range(127):
            ov[i] = ob[i]
    return out


def mul256(a, b):
    cdef i64[::1] av = np.ascontiguousarray(a, dtype=np.int64)
    cdef i64[::1] bv = np.ascontiguousarray(b, dtype=np.int64)
    if av.shape[0] != 256 or bv.shape[0] != 256:
        raise ValueError("mul256 expects 256 coefficients")
    cdef u16 ab[256]
    cdef u16 bb[256]
    cdef u16 ob[511]
    out = np.empty(511, dtype=np.int64)
    cdef i64[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        _to_u16(av, ab, 256)
        _to_u16(bv, bb, 256)
        mul256_c(ab, bb, ob)
        for i in range(511):
            ov[i] = ob[i]
    return out


def kara64_eval(a):
    """(64,) -> (9, 16) or (k, 64) -> (k, 9, 16) piece split."""
    arr = np.ascontiguousarray(a, dtype=np.int64)
    single = arr.ndim == 1
    if single:
        arr = arr[None, :]
    if arr.shape[1] != 64:
        raise ValueError("kara64_eval expects 64 coefficients")
    cdef i64[:, ::1] av = arr
    cdef Py_ssize_t k = av.shape[0], r, i
    out = np.empty((k, 9, 16), dtype=np.int64)
    cdef i64[:, :, ::1] ov = out
    cdef u16 ab[64]
    cdef u16 pieces[144]
    with nogil:
        for r in range(k):
            _to_u16(av[r], ab, 64)
            kara64_eval_c(ab, pieces)
            for i in range(144):
                ov[r, i // 16, i % 16] = pieces[i]
    return out[0] if single else out


def kara64_basemul_sum(ea, eb):
    """(k, 9, 16) x (k, 9, 16) -> (9, 31): piecewise products summed over k."""
    cdef i64[:, :, ::1] eav = np.ascontiguousarray(ea, dtype=np.int64)
    cdef i64[:, :, ::1] ebv = np.ascontiguousarray(eb, dtype=np.int64)
    if eav.shape[1] != 9 or eav.shape[2] != 16:
        raise ValueError("expected (k, 9, 16) evaluations")
    cdef Py_ssize_t k = eav.shape[0], r, t, i
    cdef u16 acc[9][31]
    cdef u16 pa[16]
    cdef u16 pb[16]
    cdef u16 prod[31]
    out = np.empty((9, 31), dtype=np.int64)
    cdef i64[:, ::1] ov = out
    with nogil:
        for t in range(9):
            for i in range(31):
                acc[t][i] = 0
        for r in range(k):
            for t in range(9):
                _to_u16(eav[r, t], pa, 16)
                _to_u16(ebv[r, t], pb, 16)
                sb16(pa, pb, prod)
                for i in range(31):
                    acc[t][i] = <u16> (acc[t][i] + prod[i])
        for t in range(9):
            for i in range(31):
                ov[t, i] = acc[t][i]
    return out


def kara64_interp(w):
    """(9, 31) accumulated sub-products -> (127,) recombined product."""
    cdef i64[:, ::1] wv = np.ascontiguousarray(w, dtype=np.int64)
    if wv.shape[0] != 9 or wv.shape[1] != 31:
        raise ValueError("expected (9, 31) sub-products")
    cdef u16 wb[279]
    cdef u16 ob[127]
    cdef Py_ssize_t t, i
    out = np.empty(127, dtype=np.int64)
    cdef i64[::1] ov = out
    with nogil:
        for t in range(9):
            for i in range(31):
                wb[t * 31 + i] = <u16> wv[t, i]
        kara64_interp_c(wb, ob)
        for i in range(127):
            ov[i] = ob[i]
    return out
