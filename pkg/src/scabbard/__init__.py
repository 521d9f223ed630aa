"""Scabbard: a suite of three LWR-based key-encapsulation mechanisms.

Florete (ring-based, built for speed), Espada (module-based with tiny
64-coefficient polynomials, built for parallelism and low memory) and
Sable (a leaner take on the Saber shape), each at three security levels.
"""

from .kem import KemKeyPair, encaps, kem_decaps, kem_encaps, kem_keygen, keygen
from .params import (ALL_SCHEME_IDS, Level, Scheme, SchemeId, SchemeParams,
                     all_params, derived_sizes, params_by_name, params_for)

__version__ = "0.1.0"

__all__ = [
    "ALL_SCHEME_IDS",
    "KemKeyPair",
    "Level",
    "Scheme",
    "SchemeId",
    "SchemeParams",
    "all_params",
    "derived_sizes",
    "encaps",
    "kem_decaps",
    "kem_encaps",
    "kem_keygen",
    "keygen",
    "params_by_name",
    "params_for",
]
