"""Registry of verification suites, one per identity checked by the package.

Each suite fills a :class:`Report` over a bounded parameter range.  Bounds
have defaults and can be overridden by keyword (the CLI maps ``--n-max``,
``--m`` and ``--r`` onto ``n_max``, ``m_max`` and ``r_max``).

Suites whose name starts with ``expected-fail-`` evaluate an identity in the
form it was printed, which is believed wrong; they pass when a
counterexample is found and stop at the first one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Callable

from . import congruences as cg
from .errors import DivisibilityFailure, UnknownId
from .families import (
    bell,
    char_poly,
    dowling,
    euler_dowling_poly,
    eulerian_poly,
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
from .report import Report
from .ring import (
    Poly,
    binomial,
    binomial_homogenize,
    factorial,
    poly_div_xpow,
    poly_eval,
    poly_mul_xpow,
    poly_reverse,
    poly_var_scale,
    sign,
)
from .series import egf_check
from .transforms import binomial_transform, hankel_transform, simons_sides
from .triangles import (
    eulerian,
    eulerian_dowling,
    r_triangle,
    r_triangle_explicit,
    stirling1,
    stirling2,
    whitney1,
    whitney1_explicit,
    whitney2,
    whitney2_alternating_sum,
    whitney2_binomial_sum,
)

X = Poly.variable("x")
ZERO = Poly(())


@dataclass
class SuiteSpec:
    name: str
    func: Callable
    defaults: dict = field(default_factory=dict)
    description: str = ""
    expected_fail: bool = False


REGISTRY: dict = {}


def suite(name, description, expected_fail=False, **defaults):
    def deco(fn):
        REGISTRY[name] = SuiteSpec(name, fn, defaults, description, expected_fail)
        return fn
    return deco


def run_suite(name: str, **overrides) -> Report:
    try:
        spec = REGISTRY[name]
    except KeyError:
        raise UnknownId(f"unknown suite {name!r}") from None
    bounds = dict(spec.defaults)
    for key, value in overrides.items():
        if key in bounds and value is not None:
            bounds[key] = value
    report = Report(name, bounds, expected_fail=spec.expected_fail, note=spec.description)
    spec.func(report, **bounds)
    return report


def run_all(**overrides) -> list:
    return [run_suite(name, **overrides) for name in REGISTRY]


# --- shared helpers ----------------------------------------------------------

def phi_scaled(k, m):
    """m^k phi_k(x/m)"""
    return poly_var_scale(bell(k), Fraction(1, m)) * m**k


def omega_scaled(k, m):
    """m^k omega_k(x/m)"""
    return poly_var_scale(geometric(k), Fraction(1, m)) * m**k


def delta(a, b=0):
    return 1 if a == b else 0


def psum(terms):
    total = ZERO
    for t in terms:
        total = total + t
    return total


def hankel_product(n):
    return prod(factorial(k) for k in range(1, n + 1))


# --- Whitney numbers ---------------------------------------------------------

@suite("whitney2-explicit", "row recurrence = binomial sum = alternating sum for W_m(n,k)", m_max=5, n_max=14)
def _whitney2_explicit(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            for k in range(n + 1):
                w = whitney2(m, n, k)
                rep.check({"m": m, "n": n, "k": k}, w, whitney2_binomial_sum(m, n, k), "binomial sum")
                try:
                    alt = whitney2_alternating_sum(m, n, k)
                except DivisibilityFailure as exc:
                    rep.fail({"m": m, "n": n, "k": k}, exc.value, exc.modulus, "alternating sum not integral")
                else:
                    rep.check({"m": m, "n": n, "k": k}, w, alt, "alternating sum")


@suite("whitney1-charpoly", "signed w_m(n,k) = explicit sum = coefficients of P_n(v;m)", m_max=5, n_max=10)
def _whitney1_charpoly(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            cp = char_poly(m, n)
            for k in range(n + 1):
                w = whitney1(m, n, k)
                rep.check({"m": m, "n": n, "k": k}, w, whitney1_explicit(m, n, k), "explicit sum")
                rep.check({"m": m, "n": n, "k": k}, w, cp.coeff(k), "characteristic polynomial")


@suite("whitney1-sign", "sign pattern (-1)^(n-k) and the unsigned recursion for |w_m(n,k)|", m_max=5, n_max=12)
def _whitney1_sign(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            for k in range(n + 1):
                w = whitney1(m, n, k)
                inst = {"m": m, "n": n, "k": k}
                rep.check(inst, sign(n - k) * w, abs(w), "sign")
                if n >= 1:
                    rec = (1 + m * (n - 1)) * abs(whitney1(m, n - 1, k)) + abs(whitney1(m, n - 1, k - 1))
                    rep.check(inst, abs(w), rec, "unsigned recursion")


@suite("orthogonality", "sum_k w_m(n,k) W_m(k,j) = delta(n,j), both orders", m_max=4, n_max=10)
def _orthogonality(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            for j in range(n_max + 1):
                s1 = sum(whitney1(m, n, k) * whitney2(m, k, j) for k in range(n + 1))
                s2 = sum(whitney2(m, n, k) * whitney1(m, k, j) for k in range(n + 1))
                rep.check({"m": m, "n": n, "j": j}, s1, delta(n, j), "w*W")
                rep.check({"m": m, "n": n, "j": j}, s2, delta(n, j), "W*w")


@suite("rec1", "W_{m+1}(n,k) (m+1)^k m^(n-k) = sum_j (-1)^(n-j) C(n,j) (m+1)^j W_m(j,k)", m_max=4, n_max=10)
def _rec1(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            for k in range(n + 1):
                left = whitney2(m + 1, n, k) * (m + 1) ** k * m ** (n - k)
                right = sum(sign(n - j) * binomial(n, j) * (m + 1) ** j * whitney2(m, j, k) for j in range(n + 1))
                rep.check({"m": m, "n": n, "k": k}, left, right)


@suite("w1-stirling", "W_1(n,k) = S(n+1,k+1)", n_max=12)
def _w1_stirling(rep, n_max):
    for n in range(n_max + 1):
        for k in range(n + 1):
            rep.check({"n": n, "k": k}, whitney2(1, n, k), stirling2(n + 1, k + 1))


# --- Dowling and Tanny-Dowling polynomials -----------------------------------

def _shift_identity(report, family, m_max, n_max):
    for m in range(1, m_max + 1):
        scale = Fraction(m, m + 1)
        for n in range(n_max + 1):
            left = family(m + 1, n) * m**n
            right = psum(
                poly_var_scale(family(m, j), scale) * (sign(n - j) * binomial(n, j) * (m + 1) ** j)
                for j in range(n + 1)
            )
            report.check({"m": m, "n": n}, left, right)


@suite("recc1", "m^n D_{m+1}(n,x) = sum_j (-1)^(n-j) C(n,j) (m+1)^j D_m(j, mx/(m+1))", m_max=4, n_max=8)
def _recc1(rep, m_max, n_max):
    _shift_identity(rep, dowling, m_max, n_max)


@suite("sim0", "m^n F_{m+1}(n,x) = sum_j (-1)^(n-j) C(n,j) (m+1)^j F_m(j, mx/(m+1))", m_max=4, n_max=8)
def _sim0(rep, m_max, n_max):
    _shift_identity(rep, tanny_dowling, m_max, n_max)


@suite("resulta1", "D_m(n,x) = sum_i C(n,i) m^i phi_i(x/m)", m_max=5, n_max=10)
def _resulta1(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        forward = binomial_transform([phi_scaled(i, m) for i in range(n_max + 1)], 1, "forward")
        for n in range(n_max + 1):
            rep.check({"m": m, "n": n}, dowling(m, n), forward[n])


@suite("resulta2", "m^n phi_n(x/m) = sum_i C(n,i) (-1)^(n-i) D_m(i,x)", m_max=5, n_max=10)
def _resulta2(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        inverse = binomial_transform([dowling(m, i) for i in range(n_max + 1)], 1, "inverse")
        for n in range(n_max + 1):
            rep.check({"m": m, "n": n}, phi_scaled(n, m), inverse[n])


@suite("d1-bell", "D_1(n,x) = phi_{n+1}(x)/x", n_max=12)
def _d1_bell(rep, n_max):
    for n in range(n_max + 1):
        rep.check({"n": n}, dowling(1, n), poly_div_xpow(bell(n + 1), 1))


@suite("f1-geometric", "x F_1(n,x) = (1+x) omega_n(x) - delta(n,0)", n_max=12)
def _f1_geometric(rep, n_max):
    for n in range(n_max + 1):
        rep.check({"n": n}, X * tanny_dowling(1, n), (X + 1) * geometric(n) - delta(n))


@suite("c01", "x phi_n(x) = sum_i C(n,i) (-1)^(n-i) phi_{i+1}(x)", n_max=10)
def _c01(rep, n_max):
    for n in range(n_max + 1):
        right = psum(bell(i + 1) * (binomial(n, i) * sign(n - i)) for i in range(n + 1))
        rep.check({"n": n}, X * bell(n), right)


@suite("c02", "phi_{n+1}(x) = x sum_i C(n,i) phi_i(x)", n_max=10)
def _c02(rep, n_max):
    forward = binomial_transform([bell(i) for i in range(n_max + 1)], 1, "forward")
    for n in range(n_max + 1):
        rep.check({"n": n}, bell(n + 1), X * forward[n])


@suite("f01", "Simons-type identity for m^k phi_k(x/m) and D_m(k,x)", m_max=4, n_max=8)
def _f01(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        alpha = [phi_scaled(k, m) for k in range(2 * n_max + 1)]
        beta = [dowling(m, k) for k in range(2 * n_max + 1)]
        for n in range(n_max + 1):
            left, right = simons_sides(alpha, beta, n, n, n)
            rep.check({"m": m, "n": n}, left, right)


@suite("f02", "sum C(n,k)C(n+k,k) x phi_k = sum C(n,k)C(n+k,k)(-1)^(n-k) phi_{k+1}", n_max=8)
def _f02(rep, n_max):
    alpha = [X * bell(k) for k in range(2 * n_max + 1)]
    beta = [bell(k + 1) for k in range(2 * n_max + 1)]
    for n in range(n_max + 1):
        left, right = simons_sides(alpha, beta, n, n, n)
        rep.check({"n": n}, left, right)


@suite("bell-2k", "sum C(n,k) 2^k x phi_k = sum C(n,k) 2^k (-1)^(n-k) phi_{k+1}", n_max=8)
def _bell_2k(rep, n_max):
    for n in range(n_max + 1):
        left = psum(X * bell(k) * (binomial(n, k) * 2**k) for k in range(n + 1))
        right = psum(bell(k + 1) * (binomial(n, k) * 2**k * sign(n - k)) for k in range(n + 1))
        rep.check({"n": n}, left, right)


@suite("f1", "F_m(n,x) = sum_i C(n,i) m^i omega_i(x/m)", m_max=5, n_max=10)
def _f1(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        forward = binomial_transform([omega_scaled(i, m) for i in range(n_max + 1)], 1, "forward")
        for n in range(n_max + 1):
            rep.check({"m": m, "n": n}, tanny_dowling(m, n), forward[n])


@suite("f2", "m^n omega_n(x/m) = sum_i C(n,i) (-1)^(n-i) F_m(i,x)", m_max=5, n_max=10)
def _f2(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        inverse = binomial_transform([tanny_dowling(m, i) for i in range(n_max + 1)], 1, "inverse")
        for n in range(n_max + 1):
            rep.check({"m": m, "n": n}, omega_scaled(n, m), inverse[n])


@suite("f3", "x omega_n = (-1)^(n+1) + sum_i C(n,i) (-1)^(n-i) (x+1) omega_i", n_max=10)
def _f3(rep, n_max):
    for n in range(n_max + 1):
        right = sign(n + 1) + psum((X + 1) * geometric(i) * (binomial(n, i) * sign(n - i)) for i in range(n + 1))
        rep.check({"n": n}, X * geometric(n), right)


@suite("f4", "(1+x) omega_n = delta(n,0) + sum_i C(n,i) x omega_i", n_max=10)
def _f4(rep, n_max):
    for n in range(n_max + 1):
        right = delta(n) + psum(X * geometric(i) * binomial(n, i) for i in range(n + 1))
        rep.check({"n": n}, (1 + X) * geometric(n), right)


@suite("f5", "Chen identity for m^k omega_k(x/m) and F_m(k,x), all n, l <= nl_max, s <= min(n,l)", m_max=3, nl_max=5)
def _f5(rep, m_max, nl_max):
    size = 2 * nl_max + 1
    for m in range(1, m_max + 1):
        alpha = [omega_scaled(k, m) for k in range(size)]
        beta = [tanny_dowling(m, k) for k in range(size)]
        for n in range(nl_max + 1):
            for l in range(nl_max + 1):
                for s in range(min(n, l) + 1):
                    left, right = simons_sides(alpha, beta, n, l, s)
                    rep.check({"m": m, "n": n, "l": l, "s": s}, right, left)


def _geo_simons_sides(n, constant, weight):
    left = psum(X * geometric(k) * weight(n, k) for k in range(n + 1))
    right = constant + psum((1 + X) * geometric(k) * (weight(n, k) * sign(n - k)) for k in range(n + 1))
    return left, right


def _cc(n, k):
    return binomial(n, k) * binomial(n + k, k)


def _c2k(n, k):
    return binomial(n, k) * 2**k


@suite("geo-simons", "sum C(n,k)C(n+k,k) x omega_k = (-1)^(n+1) + sum C(n,k)C(n+k,k)(-1)^(n-k)(1+x) omega_k", n_max=10)
def _geo_simons(rep, n_max):
    for n in range(n_max + 1):
        rep.check({"n": n}, *_geo_simons_sides(n, sign(n + 1), _cc))


@suite("geo-2k", "sum C(n,k) 2^k x omega_k = (-1)^(n+1) + sum C(n,k) 2^k (-1)^(n-k) (1+x) omega_k", n_max=10)
def _geo_2k(rep, n_max):
    for n in range(n_max + 1):
        rep.check({"n": n}, *_geo_simons_sides(n, sign(n + 1), _c2k))


@suite("expected-fail-f6", "printed form: sum C(n,k)C(n+k,k) x omega_k = 1 + sum C(n,k)C(n+k,k)(-1)^(n-k) omega_k",
       expected_fail=True, n_max=10)
def _expected_fail_f6(rep, n_max):
    for n in range(n_max + 1):
        left = psum(X * geometric(k) * _cc(n, k) for k in range(n + 1))
        right = 1 + psum(geometric(k) * (_cc(n, k) * sign(n - k)) for k in range(n + 1))
        if not rep.check({"n": n}, left, right):
            return


@suite("expected-fail-f7", "printed form: sum C(n,k) 2^k x omega_k = (-1)^n + sum C(n,k) 2^k (-1)^(n-k) (1+x) omega_k",
       expected_fail=True, n_max=10)
def _expected_fail_f7(rep, n_max):
    for n in range(n_max + 1):
        if not rep.check({"n": n}, *_geo_simons_sides(n, sign(n), _c2k)):
            return


# --- Eulerian side -----------------------------------------------------------

@suite("frobenius", "A_n(x) from k! S(n,k) (x-1)^(n-k) sums, both forms", n_max=10)
def _frobenius(rep, n_max):
    xm1 = X - 1
    for n in range(n_max + 1):
        a = eulerian_poly(n)
        first = delta(n) + X * psum(xm1 ** (n - k) * (factorial(k) * stirling2(n, k)) for k in range(1, n + 1))
        second = psum(xm1 ** (n - k) * (factorial(k) * stirling2(n + 1, k + 1)) for k in range(n + 1))
        rep.check({"n": n}, first, a, "delta + x sum k!S(n,k)(x-1)^(n-k)")
        rep.check({"n": n}, second, a, "sum k!S(n+1,k+1)(x-1)^(n-k)")
        recur = all(
            eulerian(n, k) == (k + 1) * eulerian(n - 1, k) + (n - k) * eulerian(n - 1, k - 1)
            for k in range(n + 1)
        ) if n else eulerian(0, 0) == 1
        rep.check({"n": n}, recur, True, "classical Eulerian recurrence")


def _sm1_sides(n, constant):
    # x^(n+1) A_n((1+x)/x) = x * sum_k [x^k]A_n (1+x)^k x^(n-k)
    cleared = X * (binomial_homogenize(eulerian_poly(n), n, 1) - poly_mul_xpow(Poly([delta(n)]), n))
    return (1 + X) * geometric(n), cleared + constant


@suite("sm1", "(1+x) omega_n(x) = x^(n+1) (A_n((1+x)/x) - delta(n,0)) + delta(n,0)(1+x), cleared", n_max=10)
def _sm1(rep, n_max):
    for n in range(n_max + 1):
        rep.check({"n": n}, *_sm1_sides(n, (1 + X) * delta(n)))


@suite("expected-fail-sm1", "printed form with the constant 1 in place of delta(n,0)", expected_fail=True, n_max=10)
def _expected_fail_sm1(rep, n_max):
    for n in range(n_max + 1):
        if not rep.check({"n": n}, *_sm1_sides(n, 1 + X)):
            return


@suite("relation", "omega_n(x) = sum_k <n,k> (1+x)^k x^(n-k)", n_max=10)
def _relation(rep, n_max):
    for n in range(n_max + 1):
        p = Poly([eulerian(n, k) for k in range(n + 1)])
        rep.check({"n": n}, geometric(n), binomial_homogenize(p, n, 1))


@suite("eul-coeff", "coefficients of the expanded Eulerian-Dowling polynomial = a_m(n,k); a_1 reduction",
       m_max=4, n_max=8)
def _eul_coeff(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            p = euler_dowling_poly(m, n)
            for k in range(n + 1):
                rep.check({"m": m, "n": n, "k": k}, p.coeff(k), eulerian_dowling(m, n, k))
    for n in range(n_max + 1):
        for k in range(n + 1):
            rep.check({"m": 1, "n": n, "k": k}, eulerian_dowling(1, n, k), delta(n) + eulerian(n, k - 1), "m=1")


EVAL_POINTS = (2, 3, -1, Fraction(1, 2), Fraction(5, 3), Fraction(-2, 7), 4, Fraction(3, 2), -3, Fraction(7, 4), 5, 6)


@suite("eul2", "A_m(n,x) = (x-1)^n F_m(n, 1/(x-1)), by reversal-and-shift and at n+2 rational points",
       m_max=4, n_max=8)
def _eul2(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            a = euler_dowling_poly(m, n)
            f = tanny_dowling(m, n)
            rep.check({"m": m, "n": n}, a, poly_reverse(f, n)(X - 1), "reverse and shift")
            for x0 in EVAL_POINTS[: n + 2]:
                y = Fraction(x0) - 1
                rep.check({"m": m, "n": n, "x": x0}, a(x0), y**n * f(1 / y), "evaluation")


@suite("eul3", "F_m(n,x) = sum_k a_m(n,k) (1+x)^k x^(n-k)", m_max=4, n_max=8)
def _eul3(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            p = Poly([eulerian_dowling(m, n, k) for k in range(n + 1)])
            rep.check({"m": m, "n": n}, tanny_dowling(m, n), binomial_homogenize(p, n, 1))


@suite("fubini-2k", "omega_n(1) = sum_k <n,k> 2^k", n_max=12)
def _fubini_2k(rep, n_max):
    for n in range(n_max + 1):
        rep.check({"n": n}, geometric(n)(1), sum(eulerian(n, k) * 2**k for k in range(n + 1)))


# --- generating functions ----------------------------------------------------

@suite("egf-firstkind2", "(log(1+z))^k/k! generates s(n,k)", N=10)
def _egf_firstkind2(rep, N):
    for k in range(N + 1):
        rep.merge(egf_check("firstkind2", N, k=k))


@suite("egf-bell", "exp(x(e^z-1)) generates phi_n(x), x formal and at x = 1, 1/2", N=10)
def _egf_bell(rep, N):
    rep.merge(egf_check("bell", N))
    for x in (1, Fraction(1, 2)):
        rep.merge(egf_check("bell", N, x=x))


@suite("egf-whitney1", "(1+mz)^(-1/m) (log(1+mz))^k/(m^k k!) generates signed w_m(n,k)", m_max=4, N=10)
def _egf_whitney1(rep, m_max, N):
    for m in range(1, m_max + 1):
        for k in range(N + 1):
            rep.merge(egf_check("whitney1", N, m=m, k=k))


@suite("egf-whitney2", "e^z (e^(mz)-1)^k/(m^k k!) generates W_m(n,k)", m_max=4, N=10)
def _egf_whitney2(rep, m_max, N):
    for m in range(1, m_max + 1):
        for k in range(N + 1):
            rep.merge(egf_check("whitney2", N, m=m, k=k))


@suite("egf-eulerian-dowling", "EGF of the Eulerian-Dowling polynomials at x in {2, 3, 1/2}", m_max=3, N=10)
def _egf_eulerian_dowling(rep, m_max, N):
    for m in range(1, m_max + 1):
        for x in (2, 3, Fraction(1, 2)):
            rep.merge(egf_check("eulerian-dowling", N, m=m, x=x))


@suite("egf-rel1", "e^(-tz)(1+mz)^(-1/m)(log(1+mz))^k/(m^k k!) generates R_{n,k}(t), t in {1,2,-1,1/2}",
       m_max=3, N=10)
def _egf_rel1(rep, m_max, N):
    for m in range(1, m_max + 1):
        for t in (1, 2, -1, Fraction(1, 2)):
            for k in range(N + 1):
                rep.merge(egf_check("rel1", N, m=m, t=t, k=k))


U_POINTS = (1, 2, -1, 3, Fraction(1, 2), 0, -2, Fraction(-1, 3), Fraction(5, 2), 4)
T_POINTS = (1, 2, -1, 0, Fraction(1, 2), 3, -2, Fraction(1, 3), Fraction(-3, 2), 5)


@suite("egf-rel2", "e^(-tz)(1+mz)^((u-1)/m) = sum R_{n,k}(t) u^k z^n/n!, on a u-by-t grid of rational points",
       m_max=3, N=8, u_points=9, t_points=9)
def _egf_rel2(rep, m_max, N, u_points, t_points):
    for m in range(1, m_max + 1):
        for u in U_POINTS[:u_points]:
            for t in T_POINTS[:t_points]:
                rep.merge(egf_check("rel2", N, m=m, t=t, u=u))


# --- R-polynomials and congruences -------------------------------------------

TABLE1 = {
    (0, 0): [1],
    (1, 0): [-2], (1, 1): [1],
    (2, 0): [4, 1], (2, 1): [-4, -1], (2, 2): [1],
    (3, 0): [-8, -6, -2], (3, 1): [12, 9, 2], (3, 2): [-6, -3], (3, 3): [1],
    (4, 0): [16, 24, 19, 6], (4, 1): [-32, -48, -30, -6], (4, 2): [24, 30, 11], (4, 3): [-8, -6], (4, 4): [1],
}


@suite("table1", "R_{n,k}(1) with m formal reproduces the printed table (15 entries)")
def _table1(rep):
    for (n, k), coeffs in TABLE1.items():
        rep.check({"n": n, "k": k}, r_triangle(n, k, None, 1), Poly(coeffs, "m"))


@suite("rel3-vs-exp1", "recurrence values of R_{n,k}(t) = explicit sum over w_m", m_max=4, n_max=10)
def _rel3_vs_exp1(rep, m_max, n_max):
    t_formal = Poly.variable("t")
    m_formal = Poly.variable("m")
    for m in range(1, m_max + 1):
        for t in (1, 2, -1, Fraction(1, 2), t_formal):
            for n in range(n_max + 1):
                for k in range(n + 1):
                    rep.check({"m": m, "t": str(t), "n": n, "k": k},
                              r_triangle(n, k, m, t), r_triangle_explicit(n, k, m, t))
        for t in (1, 2):
            for n in range(n_max + 1):
                for k in range(n + 1):
                    rep.check({"m": m, "t": t, "n": n, "k": k},
                              poly_eval(r_triangle(n, k, m_formal, t), m), r_triangle(n, k, m, t), "m formal, then specialized")


@suite("cong4", "Gessel sum = right-hand sum, with the closed cases for i <= n; also with t formal",
       n_max=6, i_max=8, m_max=4, formal_n_max=5, formal_i_max=6, formal_m_max=3)
def _cong4(rep, n_max, i_max, m_max, formal_n_max, formal_i_max, formal_m_max):
    for n in range(n_max + 1):
        for i in range(i_max + 1):
            for m in range(1, m_max + 1):
                for t in (1, 2, -1):
                    inst = {"n": n, "i": i, "m": m, "t": t}
                    left = cg.gessel_sum(n, i, m, t)
                    rep.check(inst, left, cg.gessel_rhs(n, i, m, t), "sum = rhs")
                    if i <= n:
                        rep.check(inst, left, cg.gessel_closed_case(n, i, m, t), "closed case")
    t = Poly.variable("t")
    for n in range(formal_n_max + 1):
        for i in range(formal_i_max + 1):
            for m in range(1, formal_m_max + 1):
                rep.check({"n": n, "i": i, "m": m, "t": "formal"},
                          cg.gessel_sum(n, i, m, t), cg.gessel_rhs(n, i, m, t), "polynomial identity in t")


@suite("cong5", "n! divides the Gessel sum (exact certificates)", n_max=6, i_max=8, m_max=4)
def _cong5(rep, n_max, i_max, m_max):
    for n in range(n_max + 1):
        for i in range(i_max + 1):
            for m in range(1, m_max + 1):
                for t in (1, 2, -1):
                    inst = {"n": n, "i": i, "m": m, "t": t}
                    try:
                        cert = cg.cong_certificate(n, i, m, t)
                    except DivisibilityFailure as exc:
                        rep.fail(inst, exc.value, exc.modulus, "not divisible")
                    else:
                        rep.check(inst, cert.quotient * factorial(n), cert.value)


@suite("cong-printed", "the mod-2 and mod-6 Dowling-number congruences, plus two spot values",
       i_max=20, m_max=6)
def _cong_printed(rep, i_max, m_max):
    rep.merge(cg.printed_congruences(i_max, m_max))
    bell_nums = [cg.dowling_number(1, j) for j in range(4)]
    rep.check({"spot": "5*1-5*2+1*5"}, 5 * bell_nums[0] - 5 * bell_nums[1] + 1 * bell_nums[2], 0)
    rep.check({"spot": "5*5-5*15+52"}, 5 * bell_nums[2] - 5 * bell_nums[3] + cg.dowling_number(1, 4), 2)
    rep.check({"spot": "n=2,i=0,m=1,t=1"}, cg.gessel_sum(2, 0, 1, 1), 0)
    rep.check({"spot": "n=2,i=2,m=1,t=1"}, cg.gessel_sum(2, 2, 1, 1), 2)


# --- Hankel determinants -----------------------------------------------------

@suite("hankel-bell", "H_n(phi) = x^C(n+1,2) prod k!", n_max=5)
def _hankel_bell(rep, n_max):
    for n, h in enumerate(hankel_transform("bell", n_max)):
        rep.check({"n": n}, h, Poly.monomial(binomial(n + 1, 2), hankel_product(n)))


@suite("hankel-dowling", "H_n(D_m(.,x)) = (mx)^C(n+1,2) prod k!", m_max=4, n_max=5)
def _hankel_dowling(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        for n, h in enumerate(hankel_transform("dowling", n_max, m=m)):
            e = binomial(n + 1, 2)
            rep.check({"m": m, "n": n}, h, Poly.monomial(e, m**e * hankel_product(n)))


@suite("hankel-suter", "H_n(D_m(.,1)) = m^C(n+1,2) prod k!", m_max=4, n_max=5)
def _hankel_suter(rep, m_max, n_max):
    for m in range(1, m_max + 1):
        for n, h in enumerate(hankel_transform("dowling", n_max, m=m, x=1)):
            rep.check({"m": m, "n": n}, h, m ** binomial(n + 1, 2) * hankel_product(n))


@suite("hankel-r-dowling", "H_n(D_{m,r}/r^n) = (mx/r^2)^C(n+1,2) prod k! and H_n(D_{m,r}) = H_n(D_m)",
       m_max=3, r_max=3, n_max=4)
def _hankel_r_dowling(rep, m_max, r_max, n_max):
    for m in range(1, m_max + 1):
        plain = hankel_transform("dowling", n_max, m=m)
        for r in range(1, r_max + 1):
            scaled = hankel_transform("r-dowling-scaled", n_max, m=m, r=r)
            unscaled = hankel_transform("r-dowling", n_max, m=m, r=r)
            for n in range(n_max + 1):
                e = binomial(n + 1, 2)
                expected = Poly.monomial(e, Fraction(m, r * r) ** e * hankel_product(n))
                rep.check({"m": m, "r": r, "n": n}, scaled[n], expected, "scaled formula")
                rep.check({"m": m, "r": r, "n": n}, unscaled[n], plain[n], "equals H_n(D_m)")


@suite("hankel-binom-invariance", "H_n(a) = H_n(binomial transform of a) on seeded random integer sequences",
       n_max=3, trials=25, seed=20240613)
def _hankel_binom_invariance(rep, n_max, trials, seed):
    rng = random.Random(seed)
    length = max(9, 2 * n_max + 1)
    for trial in range(trials):
        seq = [rng.randint(-9, 9) for _ in range(length)]
        for a in (1, 2, -1):
            h0 = hankel_transform(seq, n_max)
            h1 = hankel_transform(binomial_transform(seq, a, "forward"), n_max)
            rep.check({"trial": trial, "a": a, "seq": seq}, h0, h1)


# --- r-Stirling, r-Bell, r-Dowling -------------------------------------------

@suite("rbellbell", "sum_k {n+r,k+r}_r x^k = x^(-r) sum_k s(r,k) phi_{n+k}(x)", r_max=4, n_max=8)
def _rbellbell(rep, r_max, n_max):
    for r in range(r_max + 1):
        for n in range(n_max + 1):
            rep.check({"r": r, "n": n}, r_bell(r, n), r_bell_via_bell(r, n))


@suite("rdowbel", "D_{m,r}(n,x) = sum_j C(n,j) m^j r^(n-j) phi_j(x/m)", m_max=4, r_max=4, n_max=8)
def _rdowbel(rep, m_max, r_max, n_max):
    for m in range(1, m_max + 1):
        for r in range(r_max + 1):
            for n in range(n_max + 1):
                rep.check({"m": m, "r": r, "n": n}, r_dowling(m, r, n), r_dowling_via_bell(m, r, n))
            if r == 1:
                for n in range(n_max + 1):
                    rep.check({"m": m, "r": 1, "n": n}, r_dowling(m, 1, n), dowling(m, n), "r = 1")


@suite("beldow", "m^n phi_n(x/m) = sum_k (-1)^(n-k) C(n,k) r^(n-k) D_{m,r}(k,x)", m_max=4, r_max=4, n_max=8)
def _beldow(rep, m_max, r_max, n_max):
    for m in range(1, m_max + 1):
        for r in range(r_max + 1):
            inverse = binomial_transform([r_dowling(m, r, k) for k in range(n_max + 1)], r, "inverse")
            for n in range(n_max + 1):
                rep.check({"m": m, "r": r, "n": n}, phi_scaled(n, m), inverse[n])


@suite("r-bell-binomial", "B_r(n,x) = sum_j C(n,j) r^(n-j) phi_j(x)", r_max=4, n_max=8)
def _r_bell_binomial(rep, r_max, n_max):
    for r in range(r_max + 1):
        forward = binomial_transform([bell(j) for j in range(n_max + 1)], r, "forward")
        for n in range(n_max + 1):
            rep.check({"r": r, "n": n}, r_bell(r, n), forward[n])


@suite("man", "sum_k C(n,k) r^(n-k) x^r phi_k(x) = sum_k s(r,k) phi_{n+k}(x)", r_max=4, n_max=8)
def _man(rep, r_max, n_max):
    for r in range(r_max + 1):
        for n in range(n_max + 1):
            left = psum(poly_mul_xpow(bell(k), r) * (binomial(n, k) * r ** (n - k)) for k in range(n + 1))
            right = psum(bell(n + k) * stirling1(r, k) for k in range(r + 1))
            rep.check({"r": r, "n": n}, left, right)


@suite("mout", "x^r phi_n(x) = sum_k sum_j (-1)^(n-k) C(n,k) r^(n-k) s(r,j) phi_{k+j}(x)", r_max=4, n_max=8)
def _mout(rep, r_max, n_max):
    for r in range(r_max + 1):
        for n in range(n_max + 1):
            right = psum(
                bell(k + j) * (sign(n - k) * binomial(n, k) * r ** (n - k) * stirling1(r, j))
                for k in range(n + 1)
                for j in range(r + 1)
            )
            rep.check({"r": r, "n": n}, poly_mul_xpow(bell(n), r), right)


@suite("stirling-shift", "phi_{n+r}(x) = sum_k sum_j j^(n-k) S(r,j) C(n,k) x^j phi_k(x)", r_max=4, n_max=8)
def _stirling_shift(rep, r_max, n_max):
    for r in range(r_max + 1):
        for n in range(n_max + 1):
            right = psum(
                poly_mul_xpow(bell(k), j) * (j ** (n - k) * stirling2(r, j) * binomial(n, k))
                for k in range(n + 1)
                for j in range(r + 1)
            )
            rep.check({"r": r, "n": n}, bell(n + r), right)


def _r_simons_pairs(m, r, size):
    alpha = [phi_scaled(k, m) / r**k for k in range(size)]
    beta = [r_dowling(m, r, k) / r**k for k in range(size)]
    return alpha, beta


def _r_simons_bell_pairs(r, size):
    alpha = [poly_mul_xpow(bell(k), r) / r**k for k in range(size)]
    beta = [psum(bell(k + j) * stirling1(r, j) for j in range(r + 1)) / r**k for k in range(size)]
    return alpha, beta


@suite("r-simons-1", "sum C(n,k)C(n+k,k)(m/r)^k phi_k(x/m) = sum C(n,k)C(n+k,k)(-1)^(n-k) r^(-k) D_{m,r}(k,x)",
       m_max=4, r_max=4, n_max=8)
def _r_simons_1(rep, m_max, r_max, n_max):
    for m in range(1, m_max + 1):
        for r in range(1, r_max + 1):
            alpha, beta = _r_simons_pairs(m, r, 2 * n_max + 1)
            for n in range(n_max + 1):
                rep.check({"m": m, "r": r, "n": n}, *simons_sides(alpha, beta, n, n, n))


@suite("r-simons-2", "sum C(n,k)C(n+k,k) x^r phi_k/r^k = sum C(n,k)C(n+k,k)(-1)^(n-k) r^(-k) sum_j s(r,j) phi_{k+j}",
       r_max=4, n_max=8)
def _r_simons_2(rep, r_max, n_max):
    for r in range(1, r_max + 1):
        alpha, beta = _r_simons_bell_pairs(r, 2 * n_max + 1)
        for n in range(n_max + 1):
            rep.check({"r": r, "n": n}, *simons_sides(alpha, beta, n, n, n))


@suite("expected-fail-r-simons", "printed r-Simons forms without the factor (-1)^(n-k)", expected_fail=True,
       m_max=4, r_max=4, n_max=8)
def _expected_fail_r_simons(rep, m_max, r_max, n_max):
    for n in range(n_max + 1):
        for m in range(1, m_max + 1):
            for r in range(1, r_max + 1):
                alpha, beta = _r_simons_pairs(m, r, n + 1)
                left = psum(alpha[k] * _cc(n, k) for k in range(n + 1))
                right = psum(beta[k] * _cc(n, k) for k in range(n + 1))
                if not rep.check({"display": 1, "m": m, "r": r, "n": n}, left, right):
                    return


# --- Mansour-Shattuck ----------------------------------------------------------

MS_A = (0, 1, 2, -1, Fraction(1, 2), Fraction(3, 2))
MS_B = (1, 2, -1, Fraction(1, 3))
MS_C = (0, 1, Fraction(1, 2), -2, 3)
MS_D = (1, 2, Fraction(1, 2), -1)


@suite("ms-formula", "C_n(a,b,c,d) = b^n sum_j a^(n-j) d^j C(n,j) phi_j(c/(bd)) on a rational grid", n_max=6)
def _ms_formula(rep, n_max):
    for a in MS_A:
        for b in MS_B:
            for c in MS_C:
                for d in MS_D:
                    for n in range(n_max + 1):
                        rep.check({"n": n, "a": a, "b": b, "c": c, "d": d}, ms_c(n, a, b, c, d), ms_c_bell(n, a, b, c, d))


@suite("ms-divides", "closed form for d | a: (bd)^(n+a/d)/c^(a/d) sum_k s(a/d,k) phi_{n+k}(c/(bd))",
       n_max=6, ratio_max=3)
def _ms_divides(rep, n_max, ratio_max):
    for q in range(ratio_max + 1):
        for d in (1, 2, Fraction(1, 2), -1, Fraction(1, 3)):
            a = q * d
            for b in MS_B:
                for c in MS_C:
                    if c == 0:
                        continue
                    for n in range(n_max + 1):
                        inst = {"n": n, "a": a, "b": b, "c": c, "d": d}
                        rep.check(inst, ms_c(n, a, b, c, d), ms_c_divisible(n, a, b, c, d))


def _ms_l_right(n, l):
    return Fraction(sum(stirling1(l, k) * bell(n + k)(1) for k in range(l + 1)), l**n)


@suite("ms-l-corrected", "C_n(1,1,1/l,1/l) = l^(-n) sum_k s(l,k) phi_{n+k}", n_max=6, l_max=4)
def _ms_l_corrected(rep, n_max, l_max):
    for n in range(n_max + 1):
        for l in range(1, l_max + 1):
            rep.check({"n": n, "l": l}, ms_c(n, 1, 1, Fraction(1, l), Fraction(1, l)), _ms_l_right(n, l))


@suite("expected-fail-ms-l", "printed form l^n C_n(1,1,1/l,1/l) = l^(-n) sum_k s(l,k) phi_{n+k}",
       expected_fail=True, n_max=6, l_max=4)
def _expected_fail_ms_l(rep, n_max, l_max):
    for n in range(n_max + 1):
        for l in range(1, l_max + 1):
            left = l**n * ms_c(n, 1, 1, Fraction(1, l), Fraction(1, l))
            if not rep.check({"n": n, "l": l}, left, _ms_l_right(n, l)):
                return
