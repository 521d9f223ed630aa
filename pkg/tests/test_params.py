"""Parameter-table conformance: every derived size must match the published
values exactly, and the rounding/headroom arithmetic must be internally
consistent."""

import pytest

from scabbard.params import (ALL_SCHEME_IDS, Level, RoundingConstants, Scheme,
                             SchemeId, all_params, derived_sizes, params_by_name,
                             params_for)

# (scheme, level) -> (pk, sk, ct) wire sizes in bytes
PUBLISHED_SIZES = {
    ("florete", "low"): (608, 800, 768),
    ("florete", "medium"): (896, 1152, 1248),
    ("florete", "high"): (1184, 1504, 1792),
    ("espada", "low"): (1072, 1456, 1088),
    ("espada", "medium"): (1280, 1728, 1304),
    ("espada", "high"): (1592, 2136, 1632),
    ("sable", "low"): (608, 800, 672),
    ("sable", "medium"): (896, 1152, 1024),
    ("sable", "high"): (1312, 1632, 1376),
}

# Florete pseudo-random byte budgets: (matrix stream, secret stream)
FLORETE_STREAM_BYTES = {
    "low": (704, 128),
    "medium": (960, 192),
    "high": (1280, 256),
}


def test_registry_has_exactly_nine_sets():
    assert len(ALL_SCHEME_IDS) == 9
    assert len({p.name for p in all_params()}) == 9


@pytest.mark.parametrize("scheme,level", PUBLISHED_SIZES)
def test_wire_sizes_match_published_table(scheme, level):
    p = params_by_name(scheme, level)
    assert (p.pk_bytes, p.sk_bytes, p.ct_bytes) == PUBLISHED_SIZES[(scheme, level)]


def test_params_for_examples():
    p = params_for(SchemeId(Scheme.SABLE, Level.MEDIUM))
    assert (p.n, p.l, p.eps_q, p.eps_p, p.eps_t, p.eta, p.msg_bits) == \
        (256, 3, 11, 9, 4, 1, 1)
    assert (p.pk_bytes, p.sk_bytes, p.ct_bytes) == (896, 1152, 1024)

    p = params_for(SchemeId(Scheme.FLORETE, Level.HIGH))
    assert (p.n, p.l, p.eps_q, p.eps_p, p.eps_t, p.msg_bits) == (1024, 1, 10, 9, 4, 1)
    assert (p.pk_bytes, p.sk_bytes, p.ct_bytes) == (1184, 1504, 1792)

    p = params_for(SchemeId(Scheme.ESPADA, Level.LOW))
    assert (p.n, p.l, p.eps_q, p.eps_p, p.eps_t, p.eta, p.msg_bits) == \
        (64, 10, 15, 13, 2, 3, 4)
    assert (p.pk_bytes, p.sk_bytes, p.ct_bytes) == (1072, 1456, 1088)


@pytest.mark.parametrize("level", ["low", "medium", "high"])
def test_florete_stream_budgets(level):
    p = params_by_name("florete", level)
    sizes = derived_sizes(p)
    assert sizes[3:] == FLORETE_STREAM_BYTES[level]


def test_stream_budget_formulas():
    p = params_by_name("espada", "medium")
    assert p.a_stream_bytes == 64 * 12 * 12 * 15 // 8 == 17280
    assert p.s_stream_bytes == 64 * 12 * 6 // 8
    p = params_by_name("sable", "medium")
    assert p.a_stream_bytes == 256 * 3 * 3 * 11 // 8
    assert p.s_stream_bytes == 256 * 3 * 2 // 8


def test_modulus_ordering_and_headroom(scheme_params):
    p = scheme_params
    assert p.eps_t + p.msg_bits < p.eps_p < p.eps_q
    # the multiplication tree's exact divisions must fit 16-bit lanes
    assert p.eps_q + p.tree_shift_bits <= 16


def test_tree_budgets_per_scheme():
    # base multiplier costs 3 bits; Florete's outer layer adds 0/1/3
    assert params_by_name("florete", "low").eps_q <= 13
    assert params_by_name("florete", "medium").eps_q <= 12
    assert params_by_name("florete", "high").eps_q <= 10
    assert params_by_name("sable", "high").eps_q <= 13
    assert params_by_name("espada", "low").eps_q <= 16


def test_structure_constraints(scheme_params):
    p = scheme_params
    if p.scheme_id.scheme is Scheme.FLORETE:
        assert p.l == 1
        assert (p.ring.value == "trinomial768") == (p.scheme_id.level is Level.MEDIUM)
    if p.scheme_id.scheme is Scheme.ESPADA:
        assert p.n == 64 and p.secret_bits == 4
    if p.scheme_id.scheme is Scheme.SABLE:
        assert p.n == 256 and p.secret_bits == 2


def test_rounding_constants():
    p = params_by_name("sable", "medium")
    h = p.rounding
    assert h.h1_coeff == h.h2_coeff == 2 ** (11 - 9 - 1)
    # centering chosen so the decode window is exactly +-noise_bound
    assert h.h3_coeff == 2 ** (9 - 1 - 1) - 2 ** (9 - 4 - 1 - 1) == 120
    assert h.h3_coeff == p.noise_bound
    # every set keeps a positive, symmetric window
    for q in all_params():
        assert q.rounding.h3_coeff == q.noise_bound > 0


def test_noise_bound_values():
    assert params_by_name("sable", "medium").noise_bound == 512 // 4 * 15 // 16
    assert params_by_name("florete", "low").noise_bound == 96


def test_rounding_constants_overridable():
    p = params_by_name("sable", "medium")
    alt = RoundingConstants(h1_coeff=0, h2_coeff=0, h3_coeff=1)
    assert alt != p.rounding
