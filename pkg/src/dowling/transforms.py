"""Sequence-level transforms: binomial, Simons-type two-sided sums, the
Borel weight operator and Hankel transforms."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence, Union

from .errors import IndexOutOfRange
from .families import family_poly
from .ring import Poly, binomial, factorial, hankel_det, norm, sign


def _norm(v):
    return v if isinstance(v, Poly) else norm(v)


def binomial_transform(seq: Sequence, a=1, direction: str = "forward") -> list:
    """Generalized binomial transform with ratio ``a``.

    forward: b_n = sum_k C(n,k) a^(n-k) s_k
    inverse: s_n = sum_k C(n,k) (-a)^(n-k) b_k
    """
    if direction not in ("forward", "inverse"):
        raise ValueError(f"direction must be 'forward' or 'inverse', not {direction!r}")
    ratio = a if direction == "forward" else -a
    powers = [1]
    for _ in range(len(seq)):
        powers.append(powers[-1] * ratio)
    out = []
    for n in range(len(seq)):
        acc = 0
        for k in range(n + 1):
            acc = acc + seq[k] * (binomial(n, k) * powers[n - k])
        out.append(_norm(acc))
    return out


def simons_sides(alpha: Sequence, beta: Sequence, n: int, l: int, s: int):
    """Both sides of Chen's identity for a binomial-transform pair.

    left  = sum_{k<=l} C(l,k) C(n+k,s) alpha_{n+k-s}
    right = sum_{k<=n} C(n,k) C(l+k,s) (-1)^(n-k) beta_{l+k-s}

    Terms whose binomial factor vanishes are skipped, so negative indices
    never have to be looked up.
    """
    def at(seq, i, name):
        if i >= len(seq):
            raise IndexOutOfRange(f"{name}[{i}] requested but only {len(seq)} entries supplied")
        return seq[i]

    left = 0
    for k in range(l + 1):
        c = binomial(l, k) * binomial(n + k, s)
        if c:
            left = left + at(alpha, n + k - s, "alpha") * c
    right = 0
    for k in range(n + 1):
        c = binomial(n, k) * binomial(l + k, s) * sign(n - k)
        if c:
            right = right + at(beta, l + k - s, "beta") * c
    return _norm(left), _norm(right)


def borel_weight(p: Poly) -> Poly:
    """sum p_k x^k -> sum k! p_k x^k."""
    if not isinstance(p, Poly):
        return norm(p)
    return Poly([factorial(k) * c for k, c in enumerate(p.coeffs)], p.var)


def _scaled_r_dowling(n, m, r):
    return family_poly("r-dowling", n, m=m, r=r) / Fraction(r) ** n


SEQUENCES: dict = {
    "r-dowling-scaled": (_scaled_r_dowling, ("m", "r")),
}


def family_sequence(family: str, count: int, x=None, **params) -> list:
    """First ``count`` members of a polynomial family, optionally evaluated at x."""
    if family in SEQUENCES:
        builder, names = SEQUENCES[family]
        seq = [builder(n, **{p: params[p] for p in names}) for n in range(count)]
    else:
        seq = [family_poly(family, n, **params) for n in range(count)]
    if x is not None:
        seq = [p(x) if isinstance(p, Poly) else p for p in seq]
    return seq


def hankel_transform(family: Union[str, Sequence, Callable], N: int, **params) -> list:
    """[H_0, ..., H_N] where H_n = det(a_{i+j})_{0<=i,j<=n}.

    ``family`` is a family id (with its parameters as keywords, plus an
    optional rational ``x``), an explicit sequence of at least 2N+1 entries,
    or a callable n -> a_n.
    """
    if isinstance(family, str):
        entries = family_sequence(family, 2 * N + 1, **params)
    elif callable(family):
        entries = [family(n) for n in range(2 * N + 1)]
    else:
        entries = list(family)
    return [hankel_det(entries, n) for n in range(N + 1)]
