"""Exact arithmetic kernel.

Integers are Python ints, rationals are :class:`fractions.Fraction` (ints
are accepted wherever a rational is expected), and :class:`Poly` is a dense
univariate polynomial with rational coefficients tagged by the name of its
formal variable.  A *scalar* is any of these three.

Rational values leaving this module are normalized: a Fraction with
denominator 1 is returned as an int.  This keeps integer-valued triangles in
plain ints, which is both faster and what callers compare against.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

from .errors import (
    DegreeTooLarge,
    InsufficientEntries,
    NonZeroRemainder,
    TagMismatch,
)

Rat = Union[int, Fraction]
Scalar = Union[int, Fraction, "Poly"]

VARIABLES = ("x", "v", "m", "t", "u")  # "v" stands for upsilon


def norm(value):
    """Return ``value`` as an int when it is an integral rational."""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Poly):
        return value
    raise TypeError(f"not an exact scalar: {value!r}")


def as_rat(value) -> Rat:
    """Parse ``value`` (int, Fraction or a ``"p/q"`` string) as a rational."""
    if isinstance(value, str):
        return norm(Fraction(value.strip()))
    if isinstance(value, float):
        raise TypeError("floating-point values are not accepted")
    return norm(Fraction(value))


def is_rat(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def sign(e: int) -> int:
    """(-1)**e as an int for any integer e."""
    return -1 if e % 2 else 1


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial with negative n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class Poly:
    """Dense polynomial with exact rational coefficients, lowest degree first.

    Instances are immutable and hashable.  Combining two polynomials in
    different variables raises :class:`TagMismatch`; combining with a plain
    rational is always allowed.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Sequence = (), var: str = "x"):
        cs = [norm(c) for c in coeffs]
        for c in cs:
            if isinstance(c, Poly):
                raise TypeError("polynomial coefficients must be rational")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __reduce__(self):
        return (Poly, (self.coeffs, self.var))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def variable(cls, var: str = "x") -> "Poly":
        return cls((0, 1), var)

    @classmethod
    def constant(cls, c, var: str = "x") -> "Poly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "x") -> "Poly":
        return cls([0] * k + [c], var)

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def with_var(self, var: str) -> "Poly":
        return Poly(self.coeffs, var)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.var != self.var:
                raise TagMismatch(f"cannot combine {self.var}-polynomial with {other.var}-polynomial")
            return other
        if is_rat(other):
            return Poly((other,), self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if is_rat(other):
            return Poly([c * other for c in self.coeffs], self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_rat(other):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            inv = Fraction(1) / other
            return Poly([c * inv for c in self.coeffs], self.var)
        return exact_div(self, other)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("Poly exponent must be a non-negative int")
        result = Poly((1,), self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, value):
        """Evaluate at a rational, or compose with another polynomial."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return norm(acc) if not isinstance(acc, Poly) else acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.var == other.var and self.coeffs == other.coeffs
        if is_rat(other):
            if other == 0:
                return not self.coeffs
            return self.coeffs == (norm(other),)
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        return format_poly(self)


def format_rat(c) -> str:
    c = norm(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_poly(p: Poly) -> str:
    """Render highest degree first without spaces, e.g. ``x^4+6x^3+7x^2+x``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if k == 0:
            body = format_rat(a)
        else:
            mono = p.var if k == 1 else f"{p.var}^{k}"
            if a == 1:
                body = mono
            elif isinstance(a, Fraction):
                body = f"({format_rat(a)}){mono}"
            else:
                body = f"{a}{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def format_scalar(v) -> str:
    return format_poly(v) if isinstance(v, Poly) else format_rat(v)


def poly_divmod(a: Poly, b: Poly):
    """Quotient and remainder of ``a`` by ``b`` over the rationals."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.var != b.var:
        raise TagMismatch(f"cannot divide {a.var}-polynomial by {b.var}-polynomial")
    r = [Fraction(c) for c in a.coeffs]
    db = len(b.coeffs) - 1
    lead = Fraction(b.coeffs[-1])
    if len(r) - 1 < db:
        return Poly((), a.var), a
    q = [Fraction(0)] * (len(r) - db)
    for i in range(len(r) - 1 - db, -1, -1):
        c = r[i + db] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b.coeffs):
                r[i + j] -= c * bj
    return Poly(q, a.var), Poly(r[:db], a.var)


def exact_div(a, b):
    """Divide scalars, asserting that the quotient is exact in the ring.

    Rationals divide freely; a polynomial divided by a polynomial must leave
    no remainder.
    """
    if b == 0:
        raise ZeroDivisionError("division by zero")
    if isinstance(b, Poly):
        if b.degree == 0:
            b = b.coeffs[0]
        elif is_rat(a):
            if a == 0:
                return 0
            raise NonZeroRemainder(f"{format_scalar(a)} is not divisible by {b}")
    if is_rat(b):
        if is_rat(a):
            return norm(Fraction(a) / b)
        return a / b
    q, r = poly_divmod(a, b)
    if not r.is_zero():
        raise NonZeroRemainder(f"{a} is not divisible by {b}")
    return q


def falling_factorial(v, n: int):
    """v (v-1) ... (v-n+1); 1 when n = 0."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    acc = 1
    for i in range(n):
        acc = acc * (v - i)
    return acc


def poly_eval(p, v):
    """Exact value of ``p`` at the rational ``v`` (rationals pass through)."""
    if isinstance(p, Poly):
        return p(v)
    return norm(p)


def poly_var_scale(p: Poly, c) -> Poly:
    """The substitution x -> c*x."""
    out = []
    ck = 1
    for a in p.coeffs:
        out.append(a * ck)
        ck = ck * c
    return Poly(out, p.var)


def poly_div_xpow(p: Poly, r: int) -> Poly:
    """Exact division by x**r."""
    if r < 0:
        raise ValueError("r must be non-negative")
    low = p.coeffs[:r]
    if any(c != 0 for c in low):
        raise NonZeroRemainder(f"{p} is not divisible by {p.var}^{r}")
    return Poly(p.coeffs[r:], p.var)


def poly_mul_xpow(p: Poly, r: int) -> Poly:
    return Poly([0] * r + list(p.coeffs), p.var)


def binomial_homogenize(p: Poly, n: int, a) -> Poly:
    """Sum over k of p_k (x+a)^k x^(n-k), expanded."""
    if p.degree is not None and p.degree > n:
        raise DegreeTooLarge(f"degree {p.degree} exceeds n={n}")
    x = Poly.variable(p.var)
    shifted = x + a
    total = Poly((), p.var)
    power = Poly((1,), p.var)
    for k in range(n + 1):
        c = p.coeff(k)
        if c != 0:
            total = total + poly_mul_xpow(power, n - k) * c
        power = power * shifted
    return total


def poly_reverse(p: Poly, n: int) -> Poly:
    """x^n p(1/x) for deg p <= n."""
    if p.degree is not None and p.degree > n:
        raise DegreeTooLarge(f"degree {p.degree} exceeds n={n}")
    cs = [p.coeff(k) for k in range(n + 1)]
    return Poly(cs[::-1], p.var)


def hankel_det(entries: Sequence, n: int):
    """det(entries[i+j]) for 0 <= i, j <= n by fraction-free elimination.

    Each Bareiss step divides by the previous pivot; that division is exact
    in the ring and is asserted to be so.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if len(entries) < 2 * n + 1:
        raise InsufficientEntries(f"need {2 * n + 1} entries, got {len(entries)}")
    size = n + 1
    a = [[entries[i + j] for j in range(size)] for i in range(size)]
    return bareiss_det(a)


def bareiss_det(a):
    size = len(a)
    a = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for p in range(k + 1, size):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = exact_div(a[i][j] * pivot - a[i][k] * a[k][j], prev)
        prev = pivot
    det = a[size - 1][size - 1]
    return norm(det) if sign == 1 else norm(-det)


def cofactor_det(a):
    """Naive Laplace expansion; only used as an independent oracle."""
    size = len(a)
    if size == 0:
        return 1
    if size == 1:
        return a[0][0]
    total = 0
    for j in range(size):
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
