"""Named polynomial families, each returned as an exact :class:`Poly`."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import ZeroParameter
from .ring import (
    Poly,
    as_rat,
    binomial,
    factorial,
    falling_factorial,
    norm,
    poly_div_xpow,
    poly_var_scale,
)
from .triangles import (
    eulerian,
    r_stirling2,
    r_whitney2,
    stirling1,
    stirling2,
    whitney2,
)

X = Poly.variable("x")


def char_poly(m: int, n: int) -> Poly:
    """Characteristic polynomial m^n ((v-1)/m)_n of the Dowling lattice, in v."""
    v = Poly.variable("v")
    return Poly.constant(m**n, "v") * falling_factorial((v - 1) / m, n)


@lru_cache(maxsize=None)
def bell(n: int) -> Poly:
    return Poly([stirling2(n, k) for k in range(n + 1)])


@lru_cache(maxsize=None)
def geometric(n: int) -> Poly:
    return Poly([factorial(k) * stirling2(n, k) for k in range(n + 1)])


@lru_cache(maxsize=None)
def eulerian_poly(n: int) -> Poly:
    """A_n(x) = [n == 0] + sum_{k=1}^n <n, k-1> x^k."""
    cs = [1 if n == 0 else 0] + [eulerian(n, k - 1) for k in range(1, n + 1)]
    return Poly(cs)


@lru_cache(maxsize=None)
def dowling(m: int, n: int) -> Poly:
    return Poly([whitney2(m, n, k) for k in range(n + 1)])


@lru_cache(maxsize=None)
def tanny_dowling(m: int, n: int) -> Poly:
    return Poly([factorial(k) * whitney2(m, n, k) for k in range(n + 1)])


@lru_cache(maxsize=None)
def euler_dowling_poly(m: int, n: int) -> Poly:
    """Eulerian-Dowling polynomial, expanded from sum_i i! W_m(n,i) (x-1)^(n-i)."""
    total = Poly(())
    xm1 = X - 1
    for i in range(n + 1):
        total = total + xm1 ** (n - i) * (factorial(i) * whitney2(m, n, i))
    return total


@lru_cache(maxsize=None)
def r_bell(r: int, n: int) -> Poly:
    """r-Bell polynomial sum_k {n+r, k+r}_r x^k."""
    return Poly([r_stirling2(r, n + r, k + r) for k in range(n + 1)])


def r_bell_via_bell(r: int, n: int) -> Poly:
    """x^(-r) sum_k s(r,k) phi_{n+k}(x); the division is asserted exact."""
    total = Poly(())
    for k in range(r + 1):
        total = total + bell(n + k) * stirling1(r, k)
    return poly_div_xpow(total, r)


@lru_cache(maxsize=None)
def r_dowling(m: int, r: int, n: int) -> Poly:
    return Poly([r_whitney2(m, r, n, k) for k in range(n + 1)])


def r_dowling_via_bell(m: int, r: int, n: int) -> Poly:
    """sum_j C(n,j) m^j r^(n-j) phi_j(x/m)."""
    total = Poly(())
    inv_m = Fraction(1, m)
    for j in range(n + 1):
        total = total + poly_var_scale(bell(j), inv_m) * (binomial(n, j) * m**j * r ** (n - j))
    return total


# --- Mansour-Shattuck sequence -----------------------------------------------

@lru_cache(maxsize=None)
def _ms_c(n, a, b, c, d):
    if n == 0:
        return 1
    return norm(a * b * _ms_c(n - 1, a, b, c, d) + c * _ms_c(n - 1, a + d, b, c, d))


def ms_c(n: int, a, b, c, d):
    """C_n(a,b,c,d) by its defining two-branch recursion, C_0 = 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _ms_c(n, *(as_rat(v) for v in (a, b, c, d)))


def ms_c_bell(n: int, a, b, c, d):
    """b^n sum_j a^(n-j) d^j C(n,j) phi_j(c/(bd))."""
    a, b, c, d = (as_rat(v) for v in (a, b, c, d))
    if b * d == 0:
        raise ZeroParameter("the Bell-polynomial formula needs b*d != 0")
    x0 = Fraction(c) / (b * d)
    total = sum(
        Fraction(a) ** (n - j) * Fraction(d) ** j * binomial(n, j) * bell(j)(x0) for j in range(n + 1)
    )
    return norm(Fraction(b) ** n * total)


def ms_c_divisible(n: int, a, b, c, d):
    """Closed form when a/d is a non-negative integer r:
    (bd)^(n+r) / c^r * sum_{k<=r} s(r,k) phi_{n+k}(c/(bd)).
    """
    a, b, c, d = (as_rat(v) for v in (a, b, c, d))
    if b * d == 0 or c == 0:
        raise ZeroParameter("the closed form needs b*d != 0 and c != 0")
    ratio = Fraction(a) / d
    if ratio.denominator != 1 or ratio < 0:
        raise ValueError(f"d={d} does not divide a={a}")
    r = int(ratio)
    bd = Fraction(b) * d
    x0 = Fraction(c) / bd
    total = sum(stirling1(r, k) * bell(n + k)(x0) for k in range(r + 1))
    return norm(bd ** (n + r) / Fraction(c) ** r * total)


def bell_number(n: int) -> int:
    return bell(n)(1)


def fubini_number(n: int) -> int:
    return geometric(n)(1)


# family id -> (builder, parameter names); used by the CLI and hankel_transform
POLY_FAMILIES = {
    "bell": (lambda n: bell(n), ()),
    "geometric": (lambda n: geometric(n), ()),
    "eulerian": (lambda n: eulerian_poly(n), ()),
    "dowling": (lambda n, m: dowling(m, n), ("m",)),
    "tanny-dowling": (lambda n, m: tanny_dowling(m, n), ("m",)),
    "eulerian-dowling": (lambda n, m: euler_dowling_poly(m, n), ("m",)),
    "char": (lambda n, m: char_poly(m, n), ("m",)),
    "r-bell": (lambda n, r: r_bell(r, n), ("r",)),
    "r-dowling": (lambda n, m, r: r_dowling(m, r, n), ("m", "r")),
}


def family_poly(family: str, n: int, **params) -> Poly:
    try:
        builder, names = POLY_FAMILIES[family]
    except KeyError:
        raise KeyError(f"unknown polynomial family {family!r}") from None
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise ValueError(f"family {family!r} needs parameter(s) {', '.join(missing)}")
    return builder(n, **{p: params[p] for p in names})
