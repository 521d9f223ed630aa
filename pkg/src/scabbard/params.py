"""Parameter sets for the Scabbard KEM suite.

Three schemes (Florete, Espada, Sable) at three security levels each. All
moduli are powers of two (q = 2^eps_q > p = 2^eps_p > t = 2^eps_t), secrets
come from a centered binomial distribution with parameter eta, and every
byte size on the wire is derived from the fields below.
"""

from dataclasses import dataclass
from enum import Enum


class Scheme(Enum):
    FLORETE = "florete"
    ESPADA = "espada"
    SABLE = "sable"


class Level(Enum):
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"


class Ring(Enum):
    """Quotient ring shape: x^n + 1, or x^768 - x^384 + 1 for Florete-768."""

    NEGACYCLIC = "negacyclic"
    TRINOMIAL768 = "trinomial768"


@dataclass(frozen=True)
class SchemeId:
    scheme: Scheme
    level: Level

    @property
    def name(self) -> str:
        return f"{self.scheme.value}-{self.level.value}"


@dataclass(frozen=True)
class RoundingConstants:
    """The three additive constants used by the rounding steps.

    h1 centers the q->p rounds in key generation and encryption, h2 is added
    to both inner products, and h3 centers message recovery in decryption.
    h3 is chosen so a coefficient decodes correctly exactly when the
    decryption noise d satisfies |d| <= p/2^(B+1) * (1 - 1/t); the record is
    deliberately overridable so alternative centerings can be evaluated.
    """

    h1_coeff: int
    h2_coeff: int
    h3_coeff: int

    @classmethod
    def for_params(cls, p: "SchemeParams") -> "RoundingConstants":
        h1 = 1 << (p.eps_q - p.eps_p - 1)
        h2 = 1 << (p.eps_q - p.eps_p - 1)
        h3 = (1 << (p.eps_p - p.msg_bits - 1)) - (
            1 << (p.eps_p - p.eps_t - p.msg_bits - 1)
        )
        return cls(h1_coeff=h1, h2_coeff=h2, h3_coeff=h3)


SEED_BYTES = 32
MSG_BYTES = 32


@dataclass(frozen=True)
class SchemeParams:
    scheme_id: SchemeId
    n: int          # ring degree
    l: int          # module rank (1 for the ring-based Florete)
    eps_q: int      # log2 of the arithmetic modulus
    eps_p: int      # log2 of the public/ciphertext modulus
    eps_t: int      # log2 of the message-compression modulus
    eta: int        # CBD parameter: samples in [-eta, eta], 2*eta bits each
    msg_bits: int   # message bits per coefficient (B)
    ring: Ring
    tree_shift_bits: int  # total exact-division shifts along the mult tree
    sec_bits: int         # claimed post-quantum security (documentation only)
    log2_fail: int        # log2 of decryption failure probability (doc only)

    # -- secret storage ---------------------------------------------------

    @property
    def secret_bits(self) -> int:
        """Bits used to store one secret coefficient (2, or 4 for eta=3)."""
        return 2 if self.eta == 1 else 4

    # -- wire sizes (bytes) ------------------------------------------------

    @property
    def pk_body_bytes(self) -> int:
        return self.n * self.l * self.eps_p // 8

    @property
    def pk_bytes(self) -> int:
        return SEED_BYTES + self.pk_body_bytes

    @property
    def ct_u_bytes(self) -> int:
        return self.n * self.l * self.eps_p // 8

    @property
    def v_bits(self) -> int:
        return self.eps_t + self.msg_bits

    @property
    def ct_v_bytes(self) -> int:
        return self.n * self.v_bits // 8

    @property
    def ct_bytes(self) -> int:
        return self.ct_u_bytes + self.ct_v_bytes

    @property
    def secret_body_bytes(self) -> int:
        return self.n * self.l * self.secret_bits // 8

    @property
    def sk_bytes(self) -> int:
        # packed secret || z(32) || H(pk)(32) || pk
        return self.secret_body_bytes + 32 + 32 + self.pk_bytes

    # -- pseudo-random byte budgets -----------------------------------------

    @property
    def a_stream_bytes(self) -> int:
        """XOF bytes consumed to expand the public matrix A."""
        return self.n * self.l * self.l * self.eps_q // 8

    @property
    def s_stream_bytes(self) -> int:
        """XOF bytes consumed to sample one secret vector."""
        return self.n * self.l * 2 * self.eta // 8

    # -- rounding ------------------------------------------------------------

    @property
    def rounding(self) -> RoundingConstants:
        return RoundingConstants.for_params(self)

    @property
    def noise_bound(self) -> int:
        """Largest |d| the decoder tolerates: p/2^(B+1) * (1 - 1/t)."""
        p = 1 << self.eps_p
        return p // (1 << (self.msg_bits + 1)) - p // (
            (1 << (self.msg_bits + 1)) * (1 << self.eps_t)
        )

    @property
    def name(self) -> str:
        return self.scheme_id.name


def _make(scheme, level, n, l, eq, ep, et, eta, b, ring, shifts, sec, fail):
    return SchemeParams(
        scheme_id=SchemeId(scheme, level),
        n=n, l=l, eps_q=eq, eps_p=ep, eps_t=et, eta=eta, msg_bits=b,
        ring=ring, tree_shift_bits=shifts, sec_bits=sec, log2_fail=fail,
    )


# One record per (scheme, level). tree_shift_bits: the 256-coefficient base
# multiplier costs 3 bits (Toom-4); Florete adds 0/1/3 more for its outer
# Karatsuba/Toom-3/Toom-4 layer; Espada's Karatsuba-only tree costs none.
_REGISTRY = {
    SchemeId(Scheme.FLORETE, Level.LOW): _make(
        Scheme.FLORETE, Level.LOW, 512, 1, 11, 9, 2, 1, 1,
        Ring.NEGACYCLIC, 3, 104, -138),
    SchemeId(Scheme.FLORETE, Level.MEDIUM): _make(
        Scheme.FLORETE, Level.MEDIUM, 768, 1, 10, 9, 3, 1, 1,
        Ring.TRINOMIAL768, 4, 157, -131),
    SchemeId(Scheme.FLORETE, Level.HIGH): _make(
        Scheme.FLORETE, Level.HIGH, 1024, 1, 10, 9, 4, 1, 1,
        Ring.NEGACYCLIC, 6, 220, -165),
    SchemeId(Scheme.ESPADA, Level.LOW): _make(
        Scheme.ESPADA, Level.LOW, 64, 10, 15, 13, 2, 3, 4,
        Ring.NEGACYCLIC, 0, 101, -148),
    SchemeId(Scheme.ESPADA, Level.MEDIUM): _make(
        Scheme.ESPADA, Level.MEDIUM, 64, 12, 15, 13, 3, 3, 4,
        Ring.NEGACYCLIC, 0, 128, -167),
    SchemeId(Scheme.ESPADA, Level.HIGH): _make(
        Scheme.ESPADA, Level.HIGH, 64, 15, 15, 13, 5, 3, 4,
        Ring.NEGACYCLIC, 0, 168, -162),
    SchemeId(Scheme.SABLE, Level.LOW): _make(
        Scheme.SABLE, Level.LOW, 256, 2, 11, 9, 2, 1, 1,
        Ring.NEGACYCLIC, 3, 104, -139),
    SchemeId(Scheme.SABLE, Level.MEDIUM): _make(
        Scheme.SABLE, Level.MEDIUM, 256, 3, 11, 9, 4, 1, 1,
        Ring.NEGACYCLIC, 3, 169, -143),
    SchemeId(Scheme.SABLE, Level.HIGH): _make(
        Scheme.SABLE, Level.HIGH, 256, 4, 11, 10, 2, 1, 1,
        Ring.NEGACYCLIC, 3, 203, -208),
}

ALL_SCHEME_IDS = tuple(sorted(_REGISTRY, key=lambda s: (s.scheme.value, s.level.value)))


def params_for(scheme_id: SchemeId) -> SchemeParams:
    """Return the static parameter record for one of the 9 valid ids."""
    return _REGISTRY[scheme_id]


def params_by_name(scheme: str, level: str) -> SchemeParams:
    return params_for(SchemeId(Scheme(scheme.lower()), Level(level.lower())))


def all_params() -> tuple[SchemeParams, ...]:
    return tuple(_REGISTRY[s] for s in ALL_SCHEME_IDS)


def derived_sizes(p: SchemeParams) -> tuple[int, int, int, int, int]:
    """(pk, sk, ct, matrix-stream, secret-stream) byte counts."""
    return (p.pk_bytes, p.sk_bytes, p.ct_bytes,
            p.a_stream_bytes, p.s_stream_bytes)
