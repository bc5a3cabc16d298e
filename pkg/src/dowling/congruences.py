"""Dowling-number congruences obtained from the R-polynomials."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisibilityFailure
from .families import dowling
from .report import Report
from .ring import Poly, binomial, factorial
from .triangles import r_triangle, stirling2


def dowling_number(m: int, n: int) -> int:
    """D_m(n) = D_m(n, 1)."""
    return dowling(m, n)(1)


def _dowling_at(m, j, t):
    p = dowling(m, j)
    if isinstance(t, Poly):
        return p.with_var(t.var)(t)
    return p(t)


def gessel_sum(n: int, i: int, m: int, t):
    """sum_{k=0}^n R_{n,k}^{(m)}(t) D_m(i+k, t)."""
    total = 0
    for k in range(n + 1):
        total = total + r_triangle(n, k, m, t) * _dowling_at(m, i + k, t)
    return total


def gessel_rhs(n: int, i: int, m: int, t):
    """t^n n! sum_{j=0}^i m^(i-j) C(i,j) S(i-j, n) D_m(j, t)."""
    total = 0
    for j in range(i + 1):
        s = stirling2(i - j, n)
        if s:
            total = total + _dowling_at(m, j, t) * (m ** (i - j) * binomial(i, j) * s)
    return total * t**n * factorial(n)


def gessel_closed_case(n: int, i: int, m: int, t):
    """The value forced for i <= n: n! m^n t^n when i = n, else 0."""
    if i < n:
        return 0
    if i == n:
        return factorial(n) * m**n * t**n
    raise ValueError("no closed form for i > n")


@dataclass(frozen=True)
class CongCertificate:
    n: int
    i: int
    m: int
    t: int
    value: int
    quotient: int

    def __post_init__(self):
        if self.value != self.quotient * factorial(self.n):
            raise DivisibilityFailure("certificate does not factor", self.value, factorial(self.n))


def cong_certificate(n: int, i: int, m: int, t: int) -> CongCertificate:
    """Certify that n! divides the Gessel sum, with the exact quotient."""
    if not isinstance(t, int):
        raise TypeError("congruence certificates need an integer t")
    value = gessel_sum(n, i, m, t)
    q, r = divmod(value, factorial(n))
    if r:
        raise DivisibilityFailure(
            f"sum for n={n}, i={i}, m={m}, t={t} is {value}, not divisible by {n}!",
            value,
            factorial(n),
        )
    return CongCertificate(n, i, m, t, value, q)


def mod2_combination(m: int, i: int) -> int:
    """m D_m(i) + m D_m(i+1) + D_m(i+2)."""
    d = [dowling_number(m, i + j) for j in range(3)]
    return m * d[0] + m * d[1] + d[2]


def mod6_combination(m: int, i: int) -> int:
    """(4m^2-2) D_m(i) + (2m^2+3m) D_m(i+1) + 3m D_m(i+2) + D_m(i+3)."""
    d = [dowling_number(m, i + j) for j in range(4)]
    return (4 * m * m - 2) * d[0] + (2 * m * m + 3 * m) * d[1] + 3 * m * d[2] + d[3]


def printed_congruences(i_max: int = 20, m_max: int = 6) -> Report:
    report = Report("cong-printed", {"i_max": i_max, "m_max": m_max})
    for m in range(1, m_max + 1):
        for i in range(i_max + 1):
            report.check({"m": m, "i": i, "modulus": 2}, mod2_combination(m, i) % 2, 0)
            report.check({"m": m, "i": i, "modulus": 6}, mod6_combination(m, i) % 6, 0)
    return report
