"""Truncated power series in z over exact scalars, and the generating-function
certificates built on them.

There is no series division.  Every closed form is assembled from products,
``exp``, ``log`` and rational powers of series with constant term 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import (
    ConstantTermNotOne,
    NonzeroConstantTerm,
    OrderExceeded,
    TagMismatch,
    UnknownId,
)
from .families import bell, euler_dowling_poly
from .report import Report
from .ring import Poly, as_rat, factorial, norm, sign
from .triangles import r_triangle, stirling1, whitney1, whitney2


def _n(v):
    return v if isinstance(v, Poly) else norm(v)


def _tag(v):
    return v.var if isinstance(v, Poly) else None


class Series:
    """c_0 + c_1 z + ... + c_N z^N, known exactly up to order N."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [_n(c) for c in list(coeffs)[: order + 1]]
        cs += [0] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def z(cls, order):
        return cls([0, 1], order)

    @property
    def tag(self):
        tags = {_tag(c) for c in self.coeffs} - {None}
        if len(tags) > 1:
            raise TagMismatch(f"series mixes variables {sorted(tags)}")
        return tags.pop() if tags else None

    def __getitem__(self, n):
        return self.coeffs[n]

    def __add__(self, other):
        if not isinstance(other, Series):
            other = Series([other], self.order)
        _check_tags(self, other)
        order = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Series) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return Series([x * c for x in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, Series):
            return ser_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"Series({list(self.coeffs)!r}, order={self.order})"


def _check_tags(s, t):
    a, b = s.tag, t.tag
    if a is not None and b is not None and a != b:
        raise TagMismatch(f"cannot combine series over {a} with series over {b}")


def ser_mul(s: Series, t: Series) -> Series:
    """Cauchy product truncated at the smaller order."""
    _check_tags(s, t)
    order = min(s.order, t.order)
    a, b = s.coeffs, t.coeffs
    out = []
    for n in range(order + 1):
        acc = 0
        for k in range(n + 1):
            if a[k] != 0 and b[n - k] != 0:
                acc = acc + a[k] * b[n - k]
        out.append(acc)
    return Series(out, order)


def ser_pow_int(s: Series, e: int) -> Series:
    """s**e for a non-negative integer e by repeated squaring."""
    if e < 0:
        raise ValueError("use ser_pow for negative exponents")
    result = Series.one(s.order)
    base = s
    while e:
        if e & 1:
            result = ser_mul(result, base)
        e >>= 1
        if e:
            base = ser_mul(base, base)
    return result


def ser_exp(s: Series) -> Series:
    """exp(s) for s with zero constant term, from f' = s' f."""
    if s.coeffs[0] != 0:
        raise NonzeroConstantTerm("exp needs a series with zero constant term")
    g = s.coeffs
    f = [1]
    for n in range(1, s.order + 1):
        acc = 0
        for k in range(1, n + 1):
            if g[k] != 0:
                acc = acc + g[k] * f[n - k] * k
        f.append(_n(acc / Fraction(n) if not isinstance(acc, Poly) else acc / n))
    return Series(f, s.order)


def ser_log(s: Series) -> Series:
    """log(s) for s with constant term 1, from s' = L' s."""
    if s.coeffs[0] != 1:
        raise ConstantTermNotOne("log needs a series with constant term 1")
    a = s.coeffs
    L = [0]
    for n in range(1, s.order + 1):
        acc = a[n] * n
        for k in range(1, n):
            if L[k] != 0 and a[n - k] != 0:
                acc = acc - L[k] * a[n - k] * k
        L.append(_n(acc / Fraction(n) if not isinstance(acc, Poly) else acc / n))
    return Series(L, s.order)


def ser_log1p(c, N: int) -> Series:
    """log(1 + c z) = sum_{n>=1} (-1)^(n-1) c^n z^n / n."""
    if N < 0:
        raise ValueError("N must be non-negative")
    out = [0]
    cn = 1
    for n in range(1, N + 1):
        cn = cn * c
        out.append(cn * Fraction(sign(n - 1), n))
    return Series(out, N)


def ser_pow(s: Series, e) -> Series:
    """s**e = exp(e log s) for s with constant term 1."""
    if s.coeffs[0] != 1:
        raise ConstantTermNotOne("rational powers need a series with constant term 1")
    if e == 0:
        return Series.one(s.order)
    return ser_exp(ser_log(s).scale(e))


def ser_exp_linear(c, N: int) -> Series:
    """exp(c z) = sum c^n z^n / n!."""
    out = []
    cn = 1
    for n in range(N + 1):
        out.append(cn * Fraction(1, factorial(n)))
        cn = cn * c
    return Series(out, N)


def egf_coeff(s: Series, n: int):
    """n! [z^n] s."""
    if n < 0 or n > s.order:
        raise OrderExceeded(f"coefficient {n} requested from a series of order {s.order}")
    return _n(s.coeffs[n] * factorial(n))


def egf_coeffs(s: Series) -> list:
    return [egf_coeff(s, n) for n in range(s.order + 1)]


# --- closed forms ---------------------------------------------------------------

def gf_firstkind2(N, k):
    """(log(1+z))^k / k!"""
    return ser_pow_int(ser_log1p(1, N), k).scale(Fraction(1, factorial(k)))


def gf_bell(N, x=None):
    """exp(x (e^z - 1)), x formal by default."""
    x = Poly.variable("x") if x is None else x
    return ser_exp((ser_exp_linear(1, N) - 1).scale(x))


def gf_whitney1(N, m, k):
    """(1+mz)^(-1/m) (log(1+mz))^k / (m^k k!)"""
    base = ser_pow(Series([1, m], N), Fraction(-1, m))
    logs = ser_pow_int(ser_log1p(m, N), k)
    return ser_mul(base, logs).scale(Fraction(1, m**k * factorial(k)))


def gf_whitney2(N, m, k):
    """e^z (e^(mz) - 1)^k / (m^k k!)"""
    inner = ser_pow_int(ser_exp_linear(m, N) - 1, k)
    return ser_mul(ser_exp_linear(1, N), inner).scale(Fraction(1, m**k * factorial(k)))


def gf_eulerian_dowling(N, m, x):
    """m(x-1) e^((x-1)z) / (m(x-1) + 1 - e^(m(x-1)z)) at a rational x != 1.

    With c = m(x-1), the denominator divided by c is 1 - (e^(cz) - 1)/c,
    which has constant term 1 and is inverted with ser_pow(., -1).
    """
    x = as_rat(x)
    if x == 1:
        raise ValueError("the closed form is singular at x = 1")
    c = m * (x - 1)
    denom = Series.one(N) - (ser_exp_linear(c, N) - 1).scale(Fraction(1) / c)
    return ser_mul(ser_exp_linear(x - 1, N), ser_pow(denom, -1))


def gf_rel1(N, m, t, k):
    """e^(-tz) (1+mz)^(-1/m) (log(1+mz))^k / (m^k k!)"""
    return ser_mul(ser_exp_linear(-t, N), gf_whitney1(N, m, k))


def gf_rel2(N, m, t, u):
    """e^(-tz) (1+mz)^((u-1)/m)"""
    return ser_mul(ser_exp_linear(-t, N), ser_pow(Series([1, m], N), Fraction(as_rat(u) - 1, m)))


def _check_series(report, label, series, expected, **instance):
    for n, got in enumerate(egf_coeffs(series)):
        report.check({**instance, "n": n}, got, expected(n), label=label)
    return report


def egf_check(gf_id: str, N: int = 16, **params) -> Report:
    """Expand a closed form to order N and compare every EGF coefficient with
    the independently computed triangle or family value.

    ids and their parameters: firstkind2 (k), bell (optional x), whitney1
    (m, k), whitney2 (m, k), eulerian-dowling (m, x), rel1 (m, t, k), rel2
    (m, t, u).
    """
    report = Report(f"egf-{gf_id}", {"N": N, **{k: _n(v) for k, v in params.items()}})
    p = params
    if gf_id == "firstkind2":
        k = p["k"]
        return _check_series(report, gf_id, gf_firstkind2(N, k), lambda n: stirling1(n, k), k=k)
    if gf_id == "bell":
        x = p.get("x")
        s = gf_bell(N, x)
        return _check_series(report, gf_id, s, lambda n: bell(n) if x is None else bell(n)(x))
    if gf_id == "whitney1":
        m, k = p["m"], p["k"]
        return _check_series(report, gf_id, gf_whitney1(N, m, k), lambda n: whitney1(m, n, k), m=m, k=k)
    if gf_id == "whitney2":
        m, k = p["m"], p["k"]
        return _check_series(report, gf_id, gf_whitney2(N, m, k), lambda n: whitney2(m, n, k), m=m, k=k)
    if gf_id == "eulerian-dowling":
        m, x = p["m"], as_rat(p["x"])
        s = gf_eulerian_dowling(N, m, x)
        return _check_series(report, gf_id, s, lambda n: euler_dowling_poly(m, n)(x), m=m, x=x)
    if gf_id == "rel1":
        m, t, k = p["m"], p["t"], p["k"]
        s = gf_rel1(N, m, t, k)
        return _check_series(report, gf_id, s, lambda n: r_triangle(n, k, m, t), m=m, t=t, k=k)
    if gf_id == "rel2":
        m, t, u = p["m"], as_rat(p["t"]), as_rat(p["u"])
        s = gf_rel2(N, m, t, u)

        def expected(n):
            return norm(sum(r_triangle(n, k, m, t) * Fraction(u) ** k for k in range(n + 1)))

        return _check_series(report, gf_id, s, expected, m=m, t=t, u=u)
    raise UnknownId(f"unknown generating function id {gf_id!r}")


GF_IDS = ("firstkind2", "bell", "whitney1", "whitney2", "eulerian-dowling", "rel1", "rel2")
