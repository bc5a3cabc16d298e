"""Acceptance criteria.  All checks are exact equalities."""

from fractions import Fraction

import pytest

from dowling.congruences import dowling_number, gessel_sum
from dowling.families import bell, bell_number, eulerian_poly, geometric
from dowling.oeis import oeis_lookup
from dowling.ring import Poly, factorial
from dowling.suites import run_suite
from dowling.triangles import r_triangle

M = Poly.variable("m")


def criterion(number, title):
    return pytest.mark.criterion(number, title)


def assert_passes(name, **bounds):
    rep = run_suite(name, **bounds)
    assert rep.passed, f"{name}: {rep.counterexample}"
    assert rep.checked > 0
    return rep


@criterion(1, "R-polynomial table reproduced exactly")
def test_table1():
    rep = assert_passes("table1")
    assert rep.checked == 15
    assert r_triangle(1, 0, None, 1) == -2
    assert r_triangle(2, 0, None, 1) == M + 4
    assert r_triangle(3, 1, None, 1) == 2 * M**2 + 9 * M + 12
    assert r_triangle(4, 2, None, 1) == 11 * M**2 + 30 * M + 24


@criterion(2, "Bell, geometric and Eulerian polynomial lists")
def test_polynomial_lists():
    assert [str(bell(n)) for n in range(5)] == ["1", "x", "x^2+x", "x^3+3x^2+x", "x^4+6x^3+7x^2+x"]
    assert [str(geometric(n)) for n in range(5)] == ["1", "x", "2x^2+x", "6x^3+6x^2+x", "24x^4+36x^3+14x^2+x"]
    assert [str(eulerian_poly(n)) for n in range(5)] == ["1", "x", "x^2+x", "x^3+4x^2+x", "x^4+11x^3+11x^2+x"]


@criterion(3, "Whitney triangles agree across recurrence, explicit sums, char. polynomial and EGF")
def test_cross_formula():
    rep = assert_passes("whitney2-explicit", m_max=5, n_max=14)
    assert rep.checked >= 2 * 600
    assert_passes("whitney1-charpoly", m_max=4, n_max=10)
    assert_passes("egf-whitney1", m_max=4, N=10)


@criterion(4, "Whitney orthogonality")
def test_orthogonality():
    assert_passes("orthogonality", m_max=4, n_max=10)


IDENTITY_SUITES = ["rec1", "recc1", "sim0", "resulta1", "resulta2", "f1", "f2", "f3", "f4", "f01", "f02", "c01",
                  "c02", "bell-2k", "frobenius", "sm1", "relation", "eul2", "eul3", "fubini-2k"]


@criterion(5, "Identity suites at m <= 4, n <= 8")
@pytest.mark.parametrize("name", IDENTITY_SUITES)
def test_identity_suites(name):
    assert_passes(name, m_max=4, n_max=8)


@criterion(5, "Identity suites at m <= 4, n <= 8")
def test_identity_f5():
    assert_passes("f5", m_max=4, nl_max=8)


@criterion(6, "Corrected geometric Simons identities; printed forms refuted at n = 0")
def test_corrected_geometric_forms():
    assert_passes("geo-simons", n_max=10)
    assert_passes("geo-2k", n_max=10)
    for name in ("expected-fail-f6", "expected-fail-f7"):
        rep = assert_passes(name, n_max=10)
        assert rep.counterexample.instance == {"n": 0}


@criterion(7, "Generating functions certified by coefficient comparison")
@pytest.mark.parametrize("name", ["egf-firstkind2", "egf-bell", "egf-whitney1", "egf-whitney2",
                                  "egf-eulerian-dowling", "egf-rel1"])
def test_egf(name):
    assert_passes(name, N=10)


@criterion(7, "Generating functions certified by coefficient comparison")
def test_egf_rel2():
    rep = assert_passes("egf-rel2", m_max=3, N=8, u_points=5, t_points=3)
    assert rep.checked == 3 * 5 * 3 * 9
    # a grid larger than the degree of R_{n,k} in u and t for n <= 8
    assert_passes("egf-rel2", m_max=3, N=8, u_points=9, t_points=9)


@criterion(8, "Gessel sums, n! divisibility and the printed congruences")
def test_congruences():
    assert_passes("cong4", n_max=6, i_max=8, m_max=4)
    rep = assert_passes("cong5", n_max=6, i_max=8, m_max=4)
    assert rep.checked == 7 * 9 * 4 * 3
    assert_passes("cong-printed", i_max=20, m_max=6)
    assert 5 * 1 - 5 * 2 + 1 * 5 == gessel_sum(2, 0, 1, 1) == 0
    assert 5 * 5 - 5 * 15 + 52 == gessel_sum(2, 2, 1, 1) == 2 == factorial(2) * 1 * 1


@criterion(9, "Hankel determinant formulas and binomial invariance")
def test_hankel():
    assert_passes("hankel-bell", n_max=5)
    assert_passes("hankel-dowling", m_max=4, n_max=5)
    assert_passes("hankel-suter", m_max=4, n_max=5)
    assert_passes("hankel-r-dowling", m_max=3, r_max=3, n_max=4)
    assert_passes("hankel-binom-invariance", n_max=3)


R_SUITES = ["rbellbell", "rdowbel", "beldow", "r-bell-binomial", "man", "mout", "stirling-shift", "w1-stirling",
            "d1-bell", "f1-geometric", "r-simons-1", "r-simons-2"]


@criterion(10, "r-families, Mansour-Shattuck forms and the corrected l display")
@pytest.mark.parametrize("name", R_SUITES)
def test_r_suites(name):
    assert_passes(name, r_max=4, m_max=4, n_max=8)


@criterion(10, "r-families, Mansour-Shattuck forms and the corrected l display")
def test_ms_suites():
    assert_passes("ms-formula", n_max=6)
    assert_passes("ms-divides", n_max=6, ratio_max=3)
    assert_passes("ms-l-corrected")
    rep = assert_passes("expected-fail-ms-l")
    cx = rep.counterexample
    assert cx.instance == {"n": 1, "l": 2}
    assert cx.left == 3 and cx.right == Fraction(3, 2)


BELL_PRINTED = [1, 1, 2, 5, 15, 52]


@criterion(11, "Dowling-number prefixes and offline OEIS cross-check")
def test_sequences():
    assert [bell_number(n) for n in range(6)] == BELL_PRINTED
    # D_1(n) = B_{n+1}: the m = 1 prefix is the printed Bell list read from its second term
    assert [dowling_number(1, n) for n in range(5)] == BELL_PRINTED[1:]
    assert [dowling_number(2, n) for n in range(5)] == [1, 2, 6, 24, 116]
    bell_hit = oeis_lookup(BELL_PRINTED, mode="offline")
    assert "A000110" in bell_hit.ids()
    shifted_hit = oeis_lookup([dowling_number(1, n) for n in range(5)], mode="offline")
    assert "A000110" in shifted_hit.ids()
    dowling_hit = oeis_lookup([dowling_number(2, n) for n in range(5)], mode="offline")
    assert "A007405" in dowling_hit.ids()
