from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dowling.errors import IndexOutOfRange
from dowling.families import bell, dowling, geometric, r_dowling, tanny_dowling
from dowling.ring import Poly, poly_div_xpow, poly_var_scale
from dowling.transforms import binomial_transform, borel_weight, hankel_transform, simons_sides

X = Poly.variable("x")


def test_binomial_transform_examples():
    assert binomial_transform([1] * 8) == [2**n for n in range(8)]
    forward = binomial_transform([bell(i) for i in range(8)])
    assert forward == [poly_div_xpow(bell(n + 1), 1) for n in range(8)]
    m, r = 2, 3
    inverse = binomial_transform([r_dowling(m, r, k) for k in range(7)], r, "inverse")
    assert inverse == [poly_var_scale(bell(n), Fraction(1, m)) * m**n for n in range(7)]
    with pytest.raises(ValueError):
        binomial_transform([1], 1, "sideways")


@given(st.lists(st.integers(-50, 50), max_size=12), st.sampled_from([1, 2, -1, Fraction(1, 2), Fraction(-3, 2)]))
@settings(max_examples=80)
def test_binomial_round_trip(seq, a):
    assert binomial_transform(binomial_transform(seq, a, "forward"), a, "inverse") == seq


def test_simons_sides_examples():
    m = 2
    alpha = [poly_var_scale(bell(k), Fraction(1, m)) * m**k for k in range(9)]
    beta = [dowling(m, k) for k in range(9)]
    for n in range(5):
        left, right = simons_sides(alpha, beta, n, n, n)
        assert left == right
    assert simons_sides([5], [5], 0, 0, 0) == (5, 5)
    alpha = [X * bell(k) for k in range(3)]
    beta = [bell(k + 1) for k in range(3)]
    left, right = simons_sides(alpha, beta, 1, 1, 1)
    assert left == right == 2 * X**2 + X
    with pytest.raises(IndexOutOfRange):
        simons_sides([1], [1], 2, 2, 2)


def test_borel_weight():
    assert borel_weight(bell(3)) == geometric(3)
    assert borel_weight(Poly([1])) == 1
    assert borel_weight(dowling(2, 2)) == tanny_dowling(2, 2)


def test_hankel_transform_examples():
    m = Poly.variable("x") * 3
    assert hankel_transform("dowling", 2, m=3) == [1, m, m**3 * 2]
    assert hankel_transform("bell", 1) == [1, X]
    assert hankel_transform("r-dowling-scaled", 1, m=2, r=3) == [1, X * Fraction(2, 9)]
    assert hankel_transform("dowling", 2, m=2, x=1) == [1, 2, 16]
    assert hankel_transform([1, 2, 6, 24, 116], 1) == [1, 2]
    assert hankel_transform(lambda n: 2**n, 2) == [1, 0, 0]
