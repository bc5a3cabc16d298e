from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dowling.errors import DegreeTooLarge, InsufficientEntries, NonZeroRemainder, TagMismatch
from dowling.ring import (
    Poly,
    as_rat,
    binomial,
    binomial_homogenize,
    cofactor_det,
    exact_div,
    factorial,
    falling_factorial,
    format_poly,
    hankel_det,
    poly_div_xpow,
    poly_divmod,
    poly_eval,
    poly_mul_xpow,
    poly_reverse,
    poly_var_scale,
)

X = Poly.variable("x")

rats = st.fractions(min_value=-20, max_value=20, max_denominator=7)
polys = st.lists(rats, max_size=9).map(Poly)


def test_factorial_examples():
    assert factorial(0) == 1
    assert factorial(4) == 24
    assert factorial(10) == 3628800
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert binomial(3, -1) == 0
    assert binomial(12, 6) == 924
    assert binomial(3, 5) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_falling_factorial_examples():
    assert falling_factorial(X, 0) == 1
    assert falling_factorial(X, 2) == X**2 - X
    assert falling_factorial(Fraction(5, 2), 3) == Fraction(15, 8)


@pytest.mark.parametrize("n", range(1, 9))
def test_falling_factorial_is_monic_of_degree_n(n):
    p = falling_factorial(X, n)
    assert p.degree == n
    assert p.coeff(n) == 1


def test_poly_eval_examples():
    assert poly_eval(X**2 + X, 1) == 2
    assert poly_eval(Poly([0, 1, 7, 6, 1]), 1) == 15
    assert poly_eval(Poly([0, 1, 14, 36, 24]), 1) == 75


def test_poly_var_scale_examples():
    assert poly_var_scale(X**2 + X, 1) == X**2 + X
    assert poly_var_scale(X**2 + X, Fraction(1, 2)) == Poly([0, Fraction(1, 2), Fraction(1, 4)])
    expected = Poly([0, Fraction(1, 3), Fraction(1, 3), Fraction(1, 27)])
    assert poly_var_scale(Poly([0, 1, 3, 1]), Fraction(1, 3)) == expected


def test_poly_div_xpow_examples():
    assert poly_div_xpow(Poly([0, 1, 3, 1]), 1) == Poly([1, 3, 1])
    assert poly_div_xpow(X, 0) == X
    with pytest.raises(NonZeroRemainder):
        poly_div_xpow(X**2 + 1, 1)


@given(polys, st.integers(0, 8))
def test_div_xpow_inverts_mul_xpow(p, r):
    assert poly_div_xpow(poly_mul_xpow(p, r), r) == p


def test_binomial_homogenize_examples():
    assert binomial_homogenize(Poly([1]), 2, 1) == X**2
    assert binomial_homogenize(X, 1, 1) == X + 1
    assert binomial_homogenize(X**2 + X, 2, 1) == 2 * X**2 + 3 * X + 1
    # Eulerian coefficients of A_2 give omega_2
    assert binomial_homogenize(1 + X, 2, 1) == 2 * X**2 + X
    with pytest.raises(DegreeTooLarge):
        binomial_homogenize(X**3, 2, 1)


def test_poly_reverse():
    assert poly_reverse(X**2 + 2 * X + 3, 2) == 3 * X**2 + 2 * X + 1
    assert poly_reverse(X, 3) == X**2


def test_formatting():
    assert str(Poly([0, 1, 7, 6, 1])) == "x^4+6x^3+7x^2+x"
    assert str(Poly([3, -4, 1], "v")) == "v^2-4v+3"
    assert str(Poly([Fraction(3, 2), Fraction(1, 2)])) == "(1/2)x+3/2"
    assert str(Poly([])) == "0"
    assert format_poly(Poly([-2], "m")) == "-2"


def test_as_rat():
    assert as_rat("3/4") == Fraction(3, 4)
    assert as_rat("6/3") == 2 and isinstance(as_rat("6/3"), int)
    with pytest.raises(TypeError):
        as_rat(0.5)


def test_tag_mismatch():
    with pytest.raises(TagMismatch):
        X + Poly.variable("m")
    with pytest.raises(TagMismatch):
        X * Poly.variable("t")


def test_constant_polys_compare_to_scalars():
    assert Poly([3]) == 3
    assert hash(Poly([3])) == hash(3)
    assert Poly([Fraction(1, 2)]) == Fraction(1, 2)


def test_composition():
    assert X(X + 1) == X + 1
    assert (X**2)(X - 1) == X**2 - 2 * X + 1


def test_exact_division():
    assert exact_div(X**2 - 1, X - 1) == X + 1
    with pytest.raises(NonZeroRemainder):
        exact_div(X**2 + 1, X - 1)
    with pytest.raises(ZeroDivisionError):
        exact_div(X, Poly([]))


@given(polys, polys, polys)
@settings(max_examples=60)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0


@given(polys, polys.filter(lambda q: not q.is_zero()))
@settings(max_examples=60)
def test_divmod_reconstructs(p, q):
    quo, rem = poly_divmod(p, q)
    assert quo * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree


def test_hankel_examples():
    assert hankel_det([1, X, X**2 + X], 1) == X
    assert hankel_det([7], 0) == 7
    assert hankel_det([1, 2, 6, 24, 116], 1) == 2
    with pytest.raises(InsufficientEntries):
        hankel_det([1, 2], 1)


@given(st.lists(st.integers(-9, 9), min_size=9, max_size=9), st.integers(0, 4))
@settings(max_examples=80)
def test_hankel_matches_cofactor_expansion(seq, n):
    matrix = [[seq[i + j] for j in range(n + 1)] for i in range(n + 1)]
    assert hankel_det(seq, n) == cofactor_det(matrix)


def test_hankel_with_zero_pivot():
    # the leading entry is zero, so the elimination must swap rows
    seq = [0, 1, 0, 2, 5, 1, 3, 0, 4]
    for n in range(5):
        matrix = [[seq[i + j] for j in range(n + 1)] for i in range(n + 1)]
        assert hankel_det(seq, n) == cofactor_det(matrix)


def test_polys_are_immutable_and_picklable():
    import pickle

    p = Poly([1, Fraction(2, 3)], "t")
    with pytest.raises(AttributeError):
        p.var = "x"
    assert pickle.loads(pickle.dumps(p)) == p
