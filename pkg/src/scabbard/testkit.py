"""Independent oracles and statistical harnesses.

The multiplication oracle here is the reference the optimized trees are
judged against: it multiplies via plain linear convolution (numpy's
convolve on exact 64-bit integers) and reduces symbolically, sharing no
code with the polymul / ring modules. The probes measure decryption noise,
CBD sample quality, and implicit-rejection behavior end to end.
"""

import csv
import math
import secrets
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import chisquare

from .params import Ring, SchemeParams
from .symmetric import XofStream, hash_h, kdf


# ---------------------------------------------------------------------------
# multiplication oracle


def _oracle_reduce(conv: np.ndarray, n: int, ring: Ring) -> np.ndarray:
    """Fold a 2n-1 linear convolution into the quotient ring, symbolically."""
    c = [int(x) for x in conv]
    c += [0] * (2 * n - 1 - len(c))
    if ring is Ring.TRINOMIAL768:
        # x^768 = x^384 - 1, applied top-down so cascades resolve
        for i in range(2 * n - 2, n - 1, -1):
            if c[i]:
                c[i - 384] += c[i]
                c[i - 768] -= c[i]
                c[i] = 0
    else:
        # x^n = -1
        for i in range(2 * n - 2, n - 1, -1):
            if c[i]:
                c[i - n] -= c[i]
                c[i] = 0
    return np.array(c[:n], dtype=np.int64)


def oracle_ring_mul(p: SchemeParams, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Reference ring product: exact convolution, symbolic reduction, mask."""
    conv = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
    return _oracle_reduce(conv, p.n, p.ring) & ((1 << p.eps_q) - 1)


def oracle_matvec(p: SchemeParams, mat: np.ndarray, vec: np.ndarray,
                  transpose: bool = False) -> np.ndarray:
    """Naive per-term accumulate of oracle ring products, mod q."""
    out = np.zeros((p.l, p.n), dtype=np.int64)
    for i in range(p.l):
        for j in range(p.l):
            poly = mat[j][i] if transpose else mat[i][j]
            out[i] += oracle_ring_mul(p, poly, vec[j])
    return out & ((1 << p.eps_q) - 1)


def oracle_inner_prod(p: SchemeParams, bvec: np.ndarray, svec: np.ndarray) -> np.ndarray:
    """Naive accumulate of oracle ring products, mod p."""
    acc = np.zeros(p.n, dtype=np.int64)
    for i in range(p.l):
        acc += oracle_ring_mul(p, bvec[i], svec[i])
    return acc & ((1 << p.eps_p) - 1)


# ---------------------------------------------------------------------------
# decryption-noise probe


@dataclass
class NoiseReport:
    trials: int
    bound: int
    max_abs: int
    histogram: Counter = field(default_factory=Counter)

    @property
    def margin(self) -> int:
        return self.bound - self.max_abs

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["d", "count"])
            for d in sorted(self.histogram):
                writer.writerow([d, self.histogram[d]])


def noise_probe(p: SchemeParams, trials: int, rng: np.random.Generator | None = None,
                csv_path=None) -> NoiseReport:
    """Measure v'' - v' over honest transcripts and check the decode bound.

    Raises AssertionError naming the first offending coefficient if any
    sample exceeds p/2^(B+1)*(1-1/t).
    """
    from . import pke

    if rng is None:
        rng = np.random.default_rng()
    modulus = 1 << p.eps_p
    half = modulus // 2
    report = NoiseReport(trials=trials, bound=p.noise_bound, max_abs=0)
    for _ in range(trials):
        seed_a, seed_s, r = (rng.bytes(32) for _ in range(3))
        m = rng.bytes(32)
        pub, sec = pke.pke_keygen(p, seed_a, seed_s)
        ct, v_prime = pke.enc_with_trace(p, pub, m, r)
        _, v_dprime = pke.dec_with_trace(p, sec, ct)
        d = (v_dprime - v_prime) & (modulus - 1)
        d = np.where(d > half, d - modulus, d)
        worst = int(np.max(np.abs(d)))
        if worst > report.bound:
            idx = int(np.argmax(np.abs(d)))
            raise AssertionError(
                f"noise bound violated at coefficient {idx}: |{int(d[idx])}| > {report.bound}"
            )
        report.max_abs = max(report.max_abs, worst)
        report.histogram.update(d.tolist())
    if csv_path is not None:
        report.write_csv(csv_path)
    return report


# ---------------------------------------------------------------------------
# CBD distribution check


def cbd_pmf(eta: int) -> dict[int, float]:
    """Exact pmf of HW(low eta bits) - HW(high eta bits) on uniform input."""
    return {k: math.comb(2 * eta, eta + k) / 4**eta for k in range(-eta, eta + 1)}


def cbd_chi2(p: SchemeParams, samples: int, seed: bytes | None = None) -> float:
    """Chi-square p-value of sampled secret coefficients vs the exact pmf."""
    from .sampler import cbd_from_bytes

    if seed is None:
        seed = secrets.token_bytes(32)
    stream = XofStream(seed)
    values = cbd_from_bytes(stream.read(samples * 2 * p.eta // 8 + 8), p.eta)[:samples]
    counts = np.bincount(values + p.eta, minlength=2 * p.eta + 1)
    expected = np.array([cbd_pmf(p.eta)[k] for k in range(-p.eta, p.eta + 1)]) * samples
    return float(chisquare(counts, expected).pvalue)


# ---------------------------------------------------------------------------
# implicit-rejection sweep


@dataclass
class TamperReport:
    positions: int
    rejected: int
    kdf_consistent: int


def tamper_sweep(p: SchemeParams, positions: int,
                 rng: np.random.Generator | None = None) -> TamperReport:
    """Flip single ciphertext bits and verify implicit rejection.

    Each corrupted ciphertext must decapsulate to something different from
    the honest shared secret, and that something must equal
    kdf(z, H(ct')) -- the pseudorandom key derived from the stored z.
    """
    from . import kem
    from .codec import decode_sk

    if rng is None:
        rng = np.random.default_rng()
    seed_a, seed_s, z, m_seed = (rng.bytes(32) for _ in range(4))
    pair = kem.kem_keygen(p, seed_a, seed_s, z)
    ct, ss = kem.kem_encaps(p, pair.pk, m_seed)
    _, sk_z, _, _ = decode_sk(p, pair.sk)
    rejected = 0
    kdf_ok = 0
    for _ in range(positions):
        bit = int(rng.integers(0, 8 * len(ct)))
        bad = bytearray(ct)
        bad[bit // 8] ^= 1 << (bit % 8)
        bad = bytes(bad)
        got = kem.kem_decaps(p, pair.sk, bad)
        if got != ss:
            rejected += 1
        if got == kdf(sk_z, hash_h(bad)):
            kdf_ok += 1
    return TamperReport(positions=positions, rejected=rejected, kdf_consistent=kdf_ok)
