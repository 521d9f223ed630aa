"""The IND-CCA KEM: re-encrypting transform with implicit rejection.

Encapsulation hashes the public key and a 256-bit message into (K_hat, r),
encrypts deterministically under r, and derives the shared key from K_hat
and the ciphertext hash. Decapsulation re-encrypts the decrypted message
and, without branching on the outcome, keys the KDF with either K_hat' or
the stored random z. The ciphertext comparison accumulates a difference
mask over all bytes and the key selection is a masked merge.
"""

import os
from dataclasses import dataclass

from . import pke
from .codec import decode_ct, decode_pk, decode_sk, encode_ct, encode_pk, encode_sk
from .params import SchemeParams
from .symmetric import hash_g, hash_h, kdf


@dataclass(frozen=True)
class KemKeyPair:
    pk: bytes
    sk: bytes


def ct_eq(a: bytes, b: bytes) -> int:
    """1 if equal else 0, via a mask accumulated over every byte."""
    if len(a) != len(b):
        raise ValueError("ciphertext lengths differ")
    diff = 0
    for x, y in zip(a, b):
        diff |= x ^ y
    return ((diff - 1) >> 8) & 1


def select_bytes(flag: int, if_one: bytes, if_zero: bytes) -> bytes:
    """Masked merge of two equal-length strings; flag must be 0 or 1."""
    mask = -flag & 0xFF
    return bytes((x & mask) | (y & ~mask & 0xFF) for x, y in zip(if_one, if_zero))


def kem_keygen(p: SchemeParams, seed_a: bytes, seed_s: bytes, z: bytes) -> KemKeyPair:
    if not (len(seed_a) == len(seed_s) == len(z) == 32):
        raise ValueError("seeds must be 32 bytes each")
    pub, sec = pke.pke_keygen(p, seed_a, seed_s)
    pk = encode_pk(p, pub.seed_a, pub.b)
    sk = encode_sk(p, sec.s, z, hash_h(pk), pk)
    return KemKeyPair(pk=pk, sk=sk)


def kem_encaps(p: SchemeParams, pk: bytes, m_seed: bytes) -> tuple[bytes, bytes]:
    """Encapsulate the 256-bit message m_seed; returns (ciphertext, key)."""
    if len(m_seed) != 32:
        raise ValueError("message seed must be 32 bytes")
    seed_a, b = decode_pk(p, pk)
    buf = hash_g(hash_h(pk) + m_seed)
    k_hat, r = buf[:32], buf[32:]
    ct_obj = pke.pke_enc(p, pke.PkePublicKey(seed_a, b), m_seed, r)
    ct = encode_ct(p, ct_obj.u, ct_obj.v)
    return ct, kdf(k_hat, hash_h(ct))


def kem_decaps(p: SchemeParams, sk: bytes, ct: bytes) -> bytes:
    s, z, pkh, pk = decode_sk(p, sk)
    u, v = decode_ct(p, ct)
    m_dec = pke.pke_dec(p, pke.PkeSecretKey(s), pke.PkeCiphertext(u, v))
    buf = hash_g(pkh + m_dec)
    k_hat, r = buf[:32], buf[32:]
    seed_a, b = decode_pk(p, pk)
    re_obj = pke.pke_enc(p, pke.PkePublicKey(seed_a, b), m_dec, r)
    ct_star = encode_ct(p, re_obj.u, re_obj.v)
    flag = ct_eq(ct, ct_star)
    return kdf(select_bytes(flag, k_hat, z), hash_h(ct))


# ---------------------------------------------------------------------------
# randomized wrappers (the deterministic cores above are the KAT entry points)


def _entropy(n: int) -> bytes:
    if os.environ.get("SCABBARD_DETERMINISTIC") == "1":
        raise RuntimeError(
            "SCABBARD_DETERMINISTIC=1 forbids drawing OS entropy; supply seeds")
    return os.urandom(n)


def keygen(p: SchemeParams) -> KemKeyPair:
    return kem_keygen(p, _entropy(32), _entropy(32), _entropy(32))


def encaps(p: SchemeParams, pk: bytes) -> tuple[bytes, bytes]:
    return kem_encaps(p, pk, _entropy(32))
