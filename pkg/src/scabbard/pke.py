"""The IND-CPA public-key encryption core.

Key generation rounds A^T*s from q down to p; encryption rounds A*s' the
same way, hides the arranged message inside the inner product b^T*s', and
compresses to eps_t + B bits; decryption undoes the compression against
u^T*s. All rounding adds the scheme's constants before shifting. Matrix
products run at eps_q bits, inner products at eps_p bits.
"""

from dataclasses import dataclass

import numpy as np

from .codec import arrange_msg, original_msg
from .params import RoundingConstants, SchemeParams
from .polymul import inner_prod, matvec_mul
from .sampler import gen_matrix, gen_secret


@dataclass
class PkePublicKey:
    seed_a: bytes
    b: np.ndarray          # (l, n) over Z_p


@dataclass
class PkeSecretKey:
    s: np.ndarray          # (l, n) in [-eta, eta]


@dataclass
class PkeCiphertext:
    u: np.ndarray          # (l, n) over Z_p
    v: np.ndarray          # (n,) at eps_t + B bits


def pke_keygen(p: SchemeParams, seed_a: bytes, seed_s: bytes,
               rounding: RoundingConstants | None = None
               ) -> tuple[PkePublicKey, PkeSecretKey]:
    h = rounding or p.rounding
    q_mask = (1 << p.eps_q) - 1
    mat = gen_matrix(p, seed_a)
    s = gen_secret(p, seed_s)
    b = ((matvec_mul(p, mat, s, transpose=True) + h.h1_coeff) & q_mask) >> (
        p.eps_q - p.eps_p)
    return PkePublicKey(seed_a=bytes(seed_a), b=b), PkeSecretKey(s=s)


def enc_with_trace(p: SchemeParams, pk: PkePublicKey, m: bytes, r: bytes,
                   rounding: RoundingConstants | None = None
                   ) -> tuple[PkeCiphertext, np.ndarray]:
    """Deterministic encryption; also returns v' for noise instrumentation."""
    h = rounding or p.rounding
    q_mask = (1 << p.eps_q) - 1
    p_mask = (1 << p.eps_p) - 1
    mat = gen_matrix(p, pk.seed_a)
    s_new = gen_secret(p, r)
    u = ((matvec_mul(p, mat, s_new) + h.h1_coeff) & q_mask) >> (p.eps_q - p.eps_p)
    v_prime = (inner_prod(p, pk.b, s_new) + h.h2_coeff) & p_mask
    m_poly = arrange_msg(p, m)
    v = ((v_prime - (m_poly << (p.eps_p - p.msg_bits))) & p_mask) >> (
        p.eps_p - p.eps_t - p.msg_bits)
    return PkeCiphertext(u=u, v=v), v_prime


def pke_enc(p: SchemeParams, pk: PkePublicKey, m: bytes, r: bytes,
            rounding: RoundingConstants | None = None) -> PkeCiphertext:
    ct, _ = enc_with_trace(p, pk, m, r, rounding)
    return ct


def dec_with_trace(p: SchemeParams, sk: PkeSecretKey, ct: PkeCiphertext,
                   rounding: RoundingConstants | None = None
                   ) -> tuple[bytes, np.ndarray]:
    """Decryption; also returns v'' for noise instrumentation."""
    h = rounding or p.rounding
    p_mask = (1 << p.eps_p) - 1
    v_dprime = (inner_prod(p, ct.u, sk.s) + h.h2_coeff) & p_mask
    m_poly = ((v_dprime - (ct.v << (p.eps_p - p.eps_t - p.msg_bits))
               + h.h3_coeff) & p_mask) >> (p.eps_p - p.msg_bits)
    return original_msg(p, m_poly), v_dprime


def pke_dec(p: SchemeParams, sk: PkeSecretKey, ct: PkeCiphertext,
            rounding: RoundingConstants | None = None) -> bytes:
    m, _ = dec_with_trace(p, sk, ct, rounding)
    return m
