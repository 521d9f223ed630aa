"""Seed expansion: the public matrix A and the secret vectors.

Both consume a SHAKE-128 stream with a fixed byte budget: n*l*l*eps_q/8
bytes for the matrix (eps_q-bit fields, LSB-first, row-major with the
coefficient index minor) and n*l*2*eta/8 bytes for a secret (2*eta bits
per sample, Hamming-weight difference of the low and high halves).
"""

import numpy as np

from .codec import unpack_coeffs
from .params import SchemeParams
from .symmetric import XofStream


def cbd_from_bytes(data: bytes, eta: int) -> np.ndarray:
    """Centered binomial samples from a byte string, 2*eta bits each.

    Sample i reads stream bits [2*eta*i, 2*eta*(i+1)); the low eta bits are
    the positive half: HW(low) - HW(high), giving values in [-eta, eta].
    """
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8), bitorder="little")
    count = bits.size // (2 * eta)
    halves = bits[:count * 2 * eta].reshape(count, 2, eta).sum(axis=2, dtype=np.int64)
    return halves[:, 0] - halves[:, 1]


def gen_matrix(p: SchemeParams, seed_a: bytes) -> np.ndarray:
    """Expand seed_a into the (l, l, n) public matrix over Z_q."""
    stream = XofStream(seed_a)
    data = stream.read(p.a_stream_bytes)
    coeffs = unpack_coeffs(data, p.eps_q, p.n * p.l * p.l)
    return coeffs.reshape(p.l, p.l, p.n)


def gen_secret(p: SchemeParams, seed_s: bytes) -> np.ndarray:
    """Sample the (l, n) secret vector with coefficients in [-eta, eta]."""
    stream = XofStream(seed_s)
    data = stream.read(p.s_stream_bytes)
    return cbd_from_bytes(data, p.eta).reshape(p.l, p.n)
