"""Keccak-family primitives the KEM consumes.

SHAKE-128 provides the deterministic byte stream for matrix expansion and
secret sampling; SHA3-256 / SHA3-512 are the H / G hash functions of the
CCA transform. All byte-level behavior is FIPS 202, via hashlib.
"""

import hashlib


class XofStream:
    """Deterministic SHAKE-128 byte stream over a seed.

    Reading k then j bytes yields the same bytes as one read of k+j;
    hashlib's fixed-length squeeze is prefix-consistent, so the stream is
    realized by re-squeezing a geometrically growing buffer.
    """

    def __init__(self, seed: bytes):
        self._seed = bytes(seed)
        self._buf = b""
        self._pos = 0

    def read(self, size: int) -> bytes:
        if size < 0:
            raise ValueError("size must be nonnegative")
        end = self._pos + size
        if end > len(self._buf):
            grow = max(end, 2 * len(self._buf), 64)
            self._buf = hashlib.shake_128(self._seed).digest(grow)
        out = self._buf[self._pos:end]
        self._pos = end
        return out

    @property
    def position(self) -> int:
        return self._pos


def hash_h(data: bytes) -> bytes:
    """SHA3-256, 32-byte digest."""
    return hashlib.sha3_256(data).digest()


def hash_g(data: bytes) -> bytes:
    """SHA3-512, 64-byte digest."""
    return hashlib.sha3_512(data).digest()


def kdf(k_hat: bytes, c_hash: bytes) -> bytes:
    """Shared-key derivation: SHA3-256(k_hat || H(ciphertext))."""
    if len(k_hat) != 32 or len(c_hash) != 32:
        raise ValueError("kdf inputs must be 32 bytes each")
    return hashlib.sha3_256(k_hat + c_hash).digest()
