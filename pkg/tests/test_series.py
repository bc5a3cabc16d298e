from fractions import Fraction

import pytest

from dowling.errors import ConstantTermNotOne, NonzeroConstantTerm, OrderExceeded, TagMismatch, UnknownId
from dowling.families import bell
from dowling.ring import Poly, binomial, factorial
from dowling.series import (
    GF_IDS,
    Series,
    egf_check,
    egf_coeff,
    egf_coeffs,
    gf_firstkind2,
    gf_whitney2,
    ser_exp,
    ser_exp_linear,
    ser_log,
    ser_log1p,
    ser_mul,
    ser_pow,
)

X = Poly.variable("x")


def test_ser_mul_examples():
    assert ser_mul(Series([1, 1], 2), Series([1, -1], 2)) == Series([1, 0, -1], 2)
    e = ser_exp_linear(1, 4)
    assert ser_mul(e, e) == Series([Fraction(2**n, factorial(n)) for n in range(5)], 4)
    root = ser_pow(Series([1, 2], 5), Fraction(1, 2))
    assert ser_mul(root, root) == Series([1, 2], 5)
    with pytest.raises(TagMismatch):
        ser_mul(Series([1, X], 3), Series([1, Poly.variable("t")], 3))


def test_order_is_min_of_operands():
    assert ser_mul(Series([1, 1], 5), Series([1, 1], 3)).order == 3
    assert (Series([1], 2) + Series([1], 7)).order == 2


def test_ser_exp_examples():
    assert ser_exp(Series([0], 4)) == Series.one(4)
    s = ser_exp((ser_exp_linear(1, 4) - 1).scale(X))
    assert egf_coeff(s, 4) == bell(4)
    assert ser_exp(Series.z(3)) == Series([1, 1, Fraction(1, 2), Fraction(1, 6)], 3)
    with pytest.raises(NonzeroConstantTerm):
        ser_exp(Series([1, 1], 3))


def test_ser_log1p_examples():
    assert ser_log1p(1, 3) == Series([0, 1, Fraction(-1, 2), Fraction(1, 3)], 3)
    m = Poly.variable("m")
    assert ser_log1p(m, 2) == Series([0, m, -(m**2) / 2], 2)


@pytest.mark.parametrize("c", [1, 2, Fraction(1, 2), 3])
def test_exp_inverts_log1p(c):
    assert ser_exp(ser_log1p(c, 12)) == Series([1, c], 12)


def test_log_inverts_exp():
    s = Series([0, 2, Fraction(-1, 3), 5, 0, 1], 5)
    assert ser_log(ser_exp(s)) == s
    with pytest.raises(ConstantTermNotOne):
        ser_log(Series([2, 1], 3))


def test_ser_pow_examples():
    s = ser_pow(Series([1, 2], 6), Fraction(-1, 2))
    expected = [Fraction(binomial(2 * n, n) * (-1) ** n, 2**n) for n in range(7)]
    # C(-1/2, n) 2^n = (-1)^n C(2n, n) / 2^n
    assert list(s.coeffs) == expected
    assert s.coeffs[:3] == (1, -1, Fraction(3, 2))
    assert ser_pow(Series([3, 1], 4).scale(Fraction(1, 3)), 0) == Series.one(4)
    assert ser_pow(Series([1, 2, 1], 6), Fraction(1, 2)) == Series([1, 1], 6)
    with pytest.raises(ConstantTermNotOne):
        ser_pow(Series([2, 1], 3), Fraction(1, 2))


def test_egf_coeff_examples():
    assert egf_coeff(gf_whitney2(6, 2, 1), 2) == 4
    assert egf_coeff(Series([7, 1], 3), 0) == 7
    assert egf_coeff(gf_firstkind2(6, 2), 4) == 11
    with pytest.raises(OrderExceeded):
        egf_coeff(Series([1], 3), 4)
    assert egf_coeffs(ser_exp_linear(1, 5)) == [1] * 6


def test_egf_check_examples():
    assert egf_check("whitney2", 8, m=2, k=1).passed
    rep = egf_check("rel1", 6, m=2, t=1, k=0)
    assert rep.passed and rep.checked == 7
    assert egf_check("rel2", 6, m=1, t=0, u=1).passed
    assert egf_check("bell", 8).passed
    assert egf_check("eulerian-dowling", 8, m=2, x=Fraction(1, 2)).passed
    with pytest.raises(UnknownId):
        egf_check("nope", 4)
    assert set(GF_IDS) == {"firstkind2", "bell", "whitney1", "whitney2", "eulerian-dowling", "rel1", "rel2"}


@pytest.mark.parametrize("m", range(1, 5))
def test_whitney1_egf_pins_signed_convention(m):
    for k in range(6):
        assert egf_check("whitney1", 10, m=m, k=k).passed


def test_series_is_immutable():
    s = Series([1, 2], 3)
    with pytest.raises(AttributeError):
        s.order = 5
    assert len(s.coeffs) == 4
