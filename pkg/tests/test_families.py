from fractions import Fraction

import pytest

from dowling.errors import ZeroParameter
from dowling.families import (
    bell,
    bell_number,
    char_poly,
    dowling,
    euler_dowling_poly,
    eulerian_poly,
    family_poly,
    fubini_number,
    geometric,
    ms_c,
    ms_c_bell,
    ms_c_divisible,
    r_bell,
    r_bell_via_bell,
    r_dowling,
    r_dowling_via_bell,
    tanny_dowling,
)
from dowling.ring import Poly, poly_div_xpow
from dowling.triangles import eulerian, factorial, whitney1, whitney2

X = Poly.variable("x")
V = Poly.variable("v")


def test_char_poly_examples():
    assert char_poly(3, 0) == 1
    assert char_poly(4, 1) == V - 1
    assert char_poly(2, 2) == V**2 - 4 * V + 3
    assert char_poly(2, 2).var == "v"


@pytest.mark.parametrize("m", range(1, 6))
def test_char_poly_coefficients_are_whitney1(m):
    for n in range(11):
        p = char_poly(m, n)
        assert [p.coeff(k) for k in range(n + 1)] == [whitney1(m, n, k) for k in range(n + 1)]


def test_basic_lists():
    assert [str(bell(n)) for n in range(5)] == ["1", "x", "x^2+x", "x^3+3x^2+x", "x^4+6x^3+7x^2+x"]
    assert [str(geometric(n)) for n in range(5)] == ["1", "x", "2x^2+x", "6x^3+6x^2+x", "24x^4+36x^3+14x^2+x"]
    assert [str(eulerian_poly(n)) for n in range(5)] == ["1", "x", "x^2+x", "x^3+4x^2+x", "x^4+11x^3+11x^2+x"]


def test_geometric_coefficients():
    for n in range(9):
        assert geometric(n) == Poly([factorial(k) * c for k, c in enumerate(bell(n).coeffs)])


def test_eulerian_poly_is_shifted_eulerian_numbers():
    for n in range(1, 9):
        assert eulerian_poly(n) == Poly([0] + [eulerian(n, k) for k in range(n)])


def test_dowling_examples():
    assert dowling(1, 2) == X**2 + 3 * X + 1
    assert dowling(2, 2) == X**2 + 4 * X + 1
    assert dowling(5, 0) == 1
    for n in range(10):
        assert dowling(1, n) == poly_div_xpow(bell(n + 1), 1)


@pytest.mark.parametrize("m", range(1, 6))
def test_dowling_coefficients_are_whitney2(m):
    for n in range(13):
        assert [dowling(m, n).coeff(k) for k in range(n + 1)] == [whitney2(m, n, k) for k in range(n + 1)]


def test_tanny_dowling_examples():
    assert tanny_dowling(1, 1) == X + 1
    assert tanny_dowling(3, 0) == 1
    assert tanny_dowling(2, 2) == 2 * X**2 + 4 * X + 1


def test_euler_dowling_examples():
    assert euler_dowling_poly(1, 2) == X**2 + X
    assert euler_dowling_poly(4, 0) == 1
    assert euler_dowling_poly(2, 1) == X


def test_r_bell_examples():
    for n in range(8):
        assert r_bell(1, n) == poly_div_xpow(bell(n + 1), 1)
    assert all(r_bell(r, 0) == 1 for r in range(5))
    assert r_bell(2, 1) == X + 2
    for r in range(4):
        for n in range(7):
            assert r_bell(r, n) == r_bell_via_bell(r, n)


def test_r_dowling_examples():
    for n in range(8):
        assert r_dowling(3, 1, n) == dowling(3, n)
    assert all(r_dowling(m, r, 1) == X + r for m in range(1, 4) for r in range(4))
    assert r_dowling(2, 3, 2) == X**2 + 8 * X + 9
    assert r_dowling(2, 3, 5) == r_dowling_via_bell(2, 3, 5)


def test_ms_examples():
    assert ms_c(0, 3, Fraction(1, 2), 7, 2) == 1
    a, b, c, d = Fraction(2, 3), 5, Fraction(-1, 4), 3
    assert ms_c(1, a, b, c, d) == a * b + c
    assert ms_c(1, 1, 1, Fraction(1, 2), Fraction(1, 2)) == Fraction(3, 2)
    assert ms_c_bell(4, a, b, c, d) == ms_c(4, a, b, c, d)
    assert ms_c_divisible(4, 2, 3, Fraction(1, 2), 1) == ms_c(4, 2, 3, Fraction(1, 2), 1)
    with pytest.raises(ZeroParameter):
        ms_c_bell(2, 1, 0, 1, 1)
    # the recursion itself still runs with bd = 0
    assert ms_c(2, 1, 0, 1, 1) == ms_c(2, 1, 0, 1, 1)


def test_numbers():
    assert [bell_number(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]
    assert [fubini_number(n) for n in range(6)] == [1, 1, 3, 13, 75, 541]


def test_family_poly_dispatch():
    assert family_poly("dowling", 2, m=2) == X**2 + 4 * X + 1
    with pytest.raises(ValueError):
        family_poly("dowling", 2)
    with pytest.raises(KeyError):
        family_poly("nope", 2)
