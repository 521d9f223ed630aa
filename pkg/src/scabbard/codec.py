"""Bit-exact serialization: coefficient packing, secret storage, message
maps, and the public-key / secret-key / ciphertext wire formats.

Bit order is LSB-first throughout: coefficient i occupies bit positions
[i*width, (i+1)*width) of the stream, and bit j of the stream is bit
(j mod 8) of byte j//8. These layouts are the interoperability contract;
see README for the byte-level documentation.
"""

import numpy as np

from .params import MSG_BYTES, SEED_BYTES, Scheme, SchemeParams


class DecodeError(ValueError):
    """Malformed wire bytes (bad length or out-of-range field)."""


def pack_coeffs(coeffs: np.ndarray, width: int) -> bytes:
    """Pack unsigned width-bit coefficients, LSB-first."""
    coeffs = np.asarray(coeffs, dtype=np.int64).ravel()
    total_bits = coeffs.size * width
    if total_bits % 8:
        raise ValueError("total bit count must be a multiple of 8")
    bits = (coeffs[:, None] >> np.arange(width)) & 1
    return np.packbits(bits.astype(np.uint8).ravel(), bitorder="little").tobytes()


def unpack_coeffs(data: bytes, width: int, count: int) -> np.ndarray:
    """Inverse of pack_coeffs; requires exactly the packed length."""
    expected = count * width
    if expected % 8 or len(data) != expected // 8:
        raise DecodeError(
            f"packed field must be {(expected + 7) // 8} bytes, got {len(data)}")
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8), bitorder="little")
    bits = bits[:expected].reshape(count, width).astype(np.int64)
    return bits @ (1 << np.arange(width, dtype=np.int64))


# ---------------------------------------------------------------------------
# secret storage: two's complement in 2 bits (eta=1) or 4 bits (eta=3)


def pack_secret(p: SchemeParams, secret: np.ndarray) -> bytes:
    bits = p.secret_bits
    return pack_coeffs(np.asarray(secret, dtype=np.int64) & ((1 << bits) - 1), bits)


def unpack_secret(p: SchemeParams, data: bytes) -> np.ndarray:
    bits = p.secret_bits
    raw = unpack_coeffs(data, bits, p.n * p.l)
    signed = np.where(raw >= (1 << (bits - 1)), raw - (1 << bits), raw)
    if np.any(np.abs(signed) > p.eta):
        raise DecodeError("secret coefficient out of range")
    return signed.reshape(p.l, p.n)


# ---------------------------------------------------------------------------
# message maps


def msg_bits(m: bytes) -> np.ndarray:
    """256 message bits, bit b = (byte[b//8] >> (b%8)) & 1."""
    if len(m) != MSG_BYTES:
        raise DecodeError("message must be 32 bytes")
    return np.unpackbits(np.frombuffer(m, dtype=np.uint8),
                         bitorder="little").astype(np.int64)


def bits_msg(bits: np.ndarray) -> bytes:
    return np.packbits(np.asarray(bits, dtype=np.uint8),
                       bitorder="little").tobytes()


def arrange_msg(p: SchemeParams, m: bytes) -> np.ndarray:
    """Message polynomial with msg_bits (B) bits per coefficient.

    Florete repeats the 256 payload bits n/256 times; Espada packs four
    payload bits per coefficient; Sable maps bit b to coefficient b.
    """
    bits = msg_bits(m)
    if p.scheme_id.scheme is Scheme.FLORETE:
        return np.tile(bits, p.n // 256)
    if p.scheme_id.scheme is Scheme.ESPADA:
        nibbles = bits.reshape(64, 4)
        return nibbles @ (1 << np.arange(4, dtype=np.int64))
    return bits


def original_msg(p: SchemeParams, m_poly: np.ndarray) -> bytes:
    """Inverse of arrange_msg on B-bit coefficients.

    Florete decodes each payload bit by thresholding the sum of its
    replicas: with k copies the bit is 0 when the sum is at most
    0 (k=2), 1 (k=3) or 2 (k=4).
    """
    m_poly = np.asarray(m_poly, dtype=np.int64)
    if m_poly.shape != (p.n,):
        raise ValueError(f"message polynomial must have {p.n} coefficients")
    if p.scheme_id.scheme is Scheme.FLORETE:
        copies = p.n // 256
        sums = m_poly.reshape(copies, 256).sum(axis=0)
        threshold = {2: 0, 3: 1, 4: 2}[copies]
        return bits_msg(sums > threshold)
    if p.scheme_id.scheme is Scheme.ESPADA:
        bits = (m_poly[:, None] >> np.arange(4)) & 1
        return bits_msg(bits.ravel())
    return bits_msg(m_poly)


# ---------------------------------------------------------------------------
# wire formats (lengths are the external contract)


def encode_pk(p: SchemeParams, seed_a: bytes, b: np.ndarray) -> bytes:
    return bytes(seed_a) + pack_coeffs(b, p.eps_p)


def decode_pk(p: SchemeParams, data: bytes) -> tuple[bytes, np.ndarray]:
    if len(data) != p.pk_bytes:
        raise DecodeError(f"public key length must be {p.pk_bytes}, got {len(data)}")
    seed_a = data[:SEED_BYTES]
    b = unpack_coeffs(data[SEED_BYTES:], p.eps_p, p.n * p.l).reshape(p.l, p.n)
    return seed_a, b


def encode_ct(p: SchemeParams, u: np.ndarray, v: np.ndarray) -> bytes:
    return pack_coeffs(u, p.eps_p) + pack_coeffs(v, p.v_bits)


def decode_ct(p: SchemeParams, data: bytes) -> tuple[np.ndarray, np.ndarray]:
    if len(data) != p.ct_bytes:
        raise DecodeError(f"ciphertext length must be {p.ct_bytes}, got {len(data)}")
    u = unpack_coeffs(data[:p.ct_u_bytes], p.eps_p, p.n * p.l).reshape(p.l, p.n)
    v = unpack_coeffs(data[p.ct_u_bytes:], p.v_bits, p.n)
    return u, v


def encode_sk(p: SchemeParams, s: np.ndarray, z: bytes, pkh: bytes,
              pk: bytes) -> bytes:
    if len(z) != 32 or len(pkh) != 32:
        raise ValueError("z and pkh must be 32 bytes")
    return pack_secret(p, s) + bytes(z) + bytes(pkh) + bytes(pk)


def decode_sk(p: SchemeParams, data: bytes) -> tuple[np.ndarray, bytes, bytes, bytes]:
    if len(data) != p.sk_bytes:
        raise DecodeError(f"secret key length must be {p.sk_bytes}, got {len(data)}")
    off = p.secret_body_bytes
    s = unpack_secret(p, data[:off])
    z = data[off:off + 32]
    pkh = data[off + 32:off + 64]
    pk = data[off + 64:]
    return s, z, pkh, pk
