"""Coefficient arithmetic mod powers of two and quotient-ring reduction.

Polynomials are int64 numpy arrays whose values are interpreted modulo a
declared bit width; secret (signed) coefficients enter as their
two's-complement residues, so subtraction needs no special casing.
"""

import numpy as np

from .params import Ring


def _mask(width: int) -> int:
    return (1 << width) - 1


def poly_add(a: np.ndarray, b: np.ndarray, width: int) -> np.ndarray:
    return (a + b) & _mask(width)


def poly_sub(a: np.ndarray, b: np.ndarray, width: int) -> np.ndarray:
    return (a - b) & _mask(width)


def poly_add_const(a: np.ndarray, c: int, width: int) -> np.ndarray:
    return (a + c) & _mask(width)


def reduce_negacyclic(prod: np.ndarray, n: int, width: int) -> np.ndarray:
    """Fold a 2n-1 linear convolution by x^n = -1."""
    prod = np.asarray(prod, dtype=np.int64)
    if prod.shape[-1] != 2 * n - 1:
        raise ValueError(f"expected {2 * n - 1} coefficients, got {prod.shape[-1]}")
    out = prod[..., :n].copy()
    out[..., : n - 1] -= prod[..., n:]
    return out & _mask(width)


def reduce_trinomial768(prod: np.ndarray, width: int) -> np.ndarray:
    """Fold a 1535-coefficient convolution by x^768 = x^384 - 1.

    Degrees 1152..1534 feed terms back above 767, so the substitution runs
    in two passes: the top block first, whose fold-down lands in the block
    the second pass consumes.
    """
    prod = np.asarray(prod, dtype=np.int64)
    if prod.shape[-1] != 1535:
        raise ValueError(f"expected 1535 coefficients, got {prod.shape[-1]}")
    c = prod.copy()
    top = c[..., 1152:1535]
    c[..., 768:1151] += top
    c[..., 384:767] -= top
    mid = c[..., 768:1152]
    c[..., 384:768] += mid
    c[..., 0:384] -= mid
    return c[..., :768] & _mask(width)


def reduce_ring(prod: np.ndarray, n: int, ring: Ring, width: int) -> np.ndarray:
    if ring is Ring.TRINOMIAL768:
        return reduce_trinomial768(prod, width)
    return reduce_negacyclic(prod, n, width)
