import pytest

from dowling.congruences import (
    CongCertificate,
    cong_certificate,
    dowling_number,
    gessel_closed_case,
    gessel_rhs,
    gessel_sum,
    mod2_combination,
    mod6_combination,
    printed_congruences,
)
from dowling.errors import DivisibilityFailure
from dowling.ring import Poly, factorial


def test_dowling_number_examples():
    assert all(dowling_number(m, 0) == 1 for m in range(1, 6))
    assert dowling_number(1, 3) == 15
    assert dowling_number(2, 3) == 24


def test_gessel_examples():
    assert gessel_sum(2, 0, 1, 1) == 0
    assert gessel_sum(2, 2, 1, 1) == 2
    assert all(gessel_sum(0, 0, m, t) == 1 for m in range(1, 4) for t in (1, 2, -1))
    assert gessel_rhs(2, 0, 1, 1) == 0
    assert gessel_rhs(2, 2, 1, 1) == 2
    assert gessel_rhs(1, 1, 2, 1) == 2
    assert gessel_sum(1, 1, 2, 1) == 2


def test_closed_cases():
    for n in range(5):
        for m in (1, 2, 3):
            for t in (1, 2, -1):
                assert gessel_sum(n, n, m, t) == factorial(n) * m**n * t**n
                for i in range(n):
                    assert gessel_sum(n, i, m, t) == 0
    with pytest.raises(ValueError):
        gessel_closed_case(1, 3, 1, 1)


def test_formal_t_identity():
    t = Poly.variable("t")
    for n in range(4):
        for i in range(5):
            assert gessel_sum(n, i, 2, t) == gessel_rhs(n, i, 2, t)


def test_certificates():
    assert cong_certificate(2, 0, 1, 1).quotient == 0
    c = cong_certificate(2, 2, 1, 1)
    assert (c.value, c.quotient) == (2, 1)
    c = cong_certificate(3, 1, 2, 1)
    assert c.value % 6 == 0 and c.value == 6 * c.quotient
    with pytest.raises(TypeError):
        cong_certificate(2, 2, 1, Poly.variable("t"))
    with pytest.raises(DivisibilityFailure):
        CongCertificate(2, 0, 1, 1, value=3, quotient=1)


def test_printed_congruence_values():
    assert mod2_combination(1, 0) == 8
    assert mod2_combination(2, 0) == 12
    assert mod6_combination(1, 0) == 42
    rep = printed_congruences(20, 6)
    assert rep.passed and rep.checked == 2 * 21 * 6
