"""Tests for the oracles and probes themselves."""

import numpy as np

from scabbard.params import Ring, params_by_name
from scabbard.testkit import (_oracle_reduce, cbd_pmf, noise_probe,
                              oracle_ring_mul)


def test_oracle_toy_negacyclic_ring():
    # in x^4 + 1: x^3 * x = x^4 = -1
    conv = np.convolve([0, 0, 0, 1], [0, 1, 0, 0])
    out = _oracle_reduce(conv, 4, Ring.NEGACYCLIC) & 511
    assert out.tolist() == [511, 0, 0, 0]


def test_oracle_distributivity(rng):
    p = params_by_name("sable", "low")
    mask = (1 << p.eps_q) - 1
    a = rng.integers(0, 1 << p.eps_q, p.n)
    b = rng.integers(-1, 2, p.n)
    c = rng.integers(-1, 2, p.n)
    lhs = oracle_ring_mul(p, a, (b + c) & mask)
    rhs = (oracle_ring_mul(p, a, b) + oracle_ring_mul(p, a, c)) & mask
    assert np.array_equal(lhs, rhs)


def test_cbd_pmf_values():
    assert cbd_pmf(1) == {-1: 0.25, 0: 0.5, 1: 0.25}
    pmf3 = cbd_pmf(3)
    expected = {-3: 1, -2: 6, -1: 15, 0: 20, 1: 15, 2: 6, 3: 1}
    for k, numerator in expected.items():
        assert pmf3[k] == numerator / 64


def test_noise_probe_reports_and_csv(tmp_path, rng):
    p = params_by_name("sable", "medium")
    out = tmp_path / "noise.csv"
    report = noise_probe(p, trials=30, rng=rng, csv_path=out)
    assert report.trials == 30
    assert report.bound == p.noise_bound
    assert 0 < report.max_abs <= report.bound
    assert report.margin == report.bound - report.max_abs
    assert sum(report.histogram.values()) == 30 * p.n
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "d,count"
    assert len(lines) > 2


def test_noise_probe_zero_secret_within_bound(monkeypatch, rng):
    # degenerate transcripts: d is set purely by the rounding constants
    from scabbard import pke, sampler

    p = params_by_name("florete", "low")
    monkeypatch.setattr(sampler, "gen_secret",
                        lambda q, seed: np.zeros((q.l, q.n), dtype=np.int64))
    monkeypatch.setattr(pke, "gen_secret", sampler.gen_secret)
    report = noise_probe(p, trials=3, rng=rng)
    assert report.max_abs <= report.bound
