import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

import kappa


def test_kappa_exact_values():
    assert kappa.kappa("A", 2, "all:1") == Fraction(1)
    assert kappa.kappa("BC", 2, "medium:2 short:2 long:1") == Fraction(7, 2)
    assert kappa.kappa("E8", mult="all:2") == 57
    assert kappa.kappa("G2", mult="short:1 long:1") == Fraction(5, 2)


def test_root_data():
    assert kappa.positive_root_count("E7", mult="all:1") == 63
    assert kappa.weyl_group_order("G2", mult="short:1 long:1") == 12
    assert kappa.n_of("A", 2, "all:1", ["1", "1"]) == 3
    assert kappa.n_of("A", 2, "all:1", [Fraction(4, 3), Fraction(2, 3)]) == 2
    assert kappa.fundamental_weights("BC", 1, "short:2 long:1") == [[Fraction(2)]]
    assert kappa.in_bounded_region("A", 2, "all:1", [1, 1])
    assert not kappa.in_bounded_region("A", 2, "all:1", [2, 2])


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        kappa.kappa("A", 0, "all:1")
    with pytest.raises(ValueError):
        kappa.kappa("A", 2, "all:0")


def test_table_all_rows_match():
    rows = kappa.kappa_table()
    assert len(rows) >= 40
    assert all(r["match"] for r in rows)
    with pytest.raises(Exception):
        kappa.kappa_table("/nonexistent/catalog.txt")


def test_decompositions_round_trip():
    rng = np.random.default_rng(0)
    for n in (2, 3):
        g = rng.standard_normal((n, n))
        if np.linalg.det(g) < 0:
            g[0] *= -1
        g_norm = g / np.linalg.det(g) ** (1.0 / n)
        k, h, nu = kappa.iwasawa(g)
        assert np.allclose(k @ np.diag(np.exp(h)) @ nu, g_norm, atol=1e-10)
        k1, a, k2 = kappa.kak(g)
        assert np.allclose(k1 @ np.diag(np.exp(a)) @ k2.T, g_norm, atol=1e-10)
        assert np.allclose(kappa.iwasawa_projection(k1 @ g), h, atol=1e-9)


def test_spherical_functions():
    value, err = kappa.spherical_sl2(1.0, y=0.0)
    assert abs(value - 1) < 1e-12
    value, err = kappa.spherical_sl2(3.0, y=1.0)
    assert abs(value) <= 1 + 1e-9 and err < 1e-10
    v3, se = kappa.spherical_sl3([0.0, 0.0], a_log=[0.0, 0.0])
    assert abs(v3 - 1) < 1e-12
    assert kappa.spherical_compact_su2(40, 1.0) == pytest.approx(kappa.legendre(40, math.cos(1.0)), abs=1e-9)
    d = kappa.deriv_spherical_sl2(1.0, 0.0, 2.0, 1.0, 1)
    h = 1e-5
    fd = (kappa.deriv_spherical_sl2(1.0, 0.0, 2.0, 1.0 + h, 0) - kappa.deriv_spherical_sl2(1.0, 0.0, 2.0, 1.0 - h, 0)) / (2 * h)
    assert abs(d - fd) < 1e-6


def test_leading_terms_and_fits():
    t = 400.0
    quad, _ = kappa.spherical_sl2(t, y=1.0)
    assert abs(quad - kappa.leading_term_sl2(1.0, 1.0, t)) * t**1.5 < 0.2
    n = 400
    assert abs(kappa.legendre(n, math.cos(1.0)) - kappa.leading_term_su2(n, 1.0).real) * n**1.5 < 0.3
    fit = kappa.decay_fit([(t, t**-0.5) for t in np.geomspace(10, 1000, 10)])
    assert fit["slope"] == pytest.approx(-0.5, abs=1e-12)
    mean = kappa.exp_sum_separation([1, 1], [1, 1], [1, -1], [1.01, -1.01], 1, 1000)
    assert mean == pytest.approx(4.219651810327876, rel=1e-10)


def test_acceptance_criterion_from_python():
    r = kappa.run_criterion(1)
    assert r["id"] == 1 and r["passed"]
    assert cmath.isfinite(complex(r["seconds"]))
