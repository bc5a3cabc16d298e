"""Memoized number triangles.

Every triangle is backed by a :class:`TriangleCache` holding complete rows.
The primary path for each family is a recurrence; the closed-form sums
(``*_explicit`` and friends) are kept alongside so the verification suites
can compare two independent routes.
"""

from __future__ import annotations

import threading

from .errors import DivisibilityFailure, IndexBelowR, TwoFormalVariables
from .ring import Poly, binomial, factorial, norm, sign


class TriangleCache:
    """Rows 0..n of one parameterized triangle, computed on demand.

    Rows are appended only once complete and are stored as tuples, so a
    concurrent reader sees either a whole row or none.  Filling is serialized
    by a per-cache lock.
    """

    def __init__(self, family, params, next_row):
        self.family = family
        self.params = params
        self._next_row = next_row
        self._rows = []
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple:
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(rows) <= n:
                rows.append(tuple(self._next_row(len(rows), rows)))
        return rows[n]

    def entry(self, n: int, k: int):
        if k < 0 or k > n:
            return 0
        return self.row(n)[k]

    def __len__(self):
        return len(self._rows)


_caches: dict = {}
_registry_lock = threading.Lock()


def get_cache(family: str, params: tuple, next_row) -> TriangleCache:
    key = (family, params)
    cache = _caches.get(key)
    if cache is None:
        with _registry_lock:
            cache = _caches.setdefault(key, TriangleCache(family, params, next_row))
    return cache


def clear_caches():
    with _registry_lock:
        _caches.clear()


def _get(row, k):
    return row[k] if 0 <= k < len(row) else 0


# --- classical triangles -----------------------------------------------------

def _stirling1_row(n, rows):
    if n == 0:
        return [1]
    prev = rows[n - 1]
    return [_get(prev, k - 1) - (n - 1) * _get(prev, k) for k in range(n + 1)]


def _stirling2_row(n, rows):
    if n == 0:
        return [1]
    prev = rows[n - 1]
    return [k * _get(prev, k) + _get(prev, k - 1) for k in range(n + 1)]


def _eulerian_row(n, rows):
    if n == 0:
        return [1]
    prev = rows[n - 1]
    return [(k + 1) * _get(prev, k) + (n - k) * _get(prev, k - 1) for k in range(n + 1)]


def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k)."""
    return get_cache("stirling1", (), _stirling1_row).entry(n, k)


def stirling2(n: int, k: int) -> int:
    return get_cache("stirling2", (), _stirling2_row).entry(n, k)


def stirling2_explicit(n: int, k: int):
    """Alternating sum (1/k!) sum_j (-1)^(k-j) C(k,j) j^n."""
    if k < 0 or k > n:
        return 0
    total = sum((-1) ** (k - j) * binomial(k, j) * j**n for j in range(k + 1))
    q, r = divmod(total, factorial(k))
    if r:
        raise DivisibilityFailure(f"S({n},{k}) sum not divisible by {k}!", total, factorial(k))
    return q


def eulerian(n: int, k: int) -> int:
    """Eulerian number <n, k>, with <n, n> = [n == 0]."""
    return get_cache("eulerian", (), _eulerian_row).entry(n, k)


# --- Whitney numbers of Dowling lattices -------------------------------------

def _whitney1_row(m):
    def next_row(n, rows):
        if n == 0:
            return [1]
        prev = rows[n - 1]
        c = 1 + m * (n - 1)
        return [_get(prev, k - 1) - c * _get(prev, k) for k in range(n + 1)]
    return next_row


def _whitney2_row(m):
    def next_row(n, rows):
        if n == 0:
            return [1]
        prev = rows[n - 1]
        return [(1 + m * k) * _get(prev, k) + _get(prev, k - 1) for k in range(n + 1)]
    return next_row


def whitney1(m: int, n: int, k: int) -> int:
    """Signed Whitney number of the first kind w_m(n, k).

    Computed from the signed form of the absolute-value recursion,
    w(n,k) = w(n-1,k-1) - (1 + m(n-1)) w(n-1,k).
    """
    _check_m(m)
    return get_cache("whitney1", (m,), _whitney1_row(m)).entry(n, k)


def whitney1_explicit(m: int, n: int, k: int) -> int:
    """sum_i (-1)^(i-k) C(i,k) m^(n-i) s(n,i)."""
    _check_m(m)
    return sum(
        (-1) ** (i - k) * binomial(i, k) * m ** (n - i) * stirling1(n, i)
        for i in range(max(k, 0), n + 1)
    )


def whitney2(m: int, n: int, k: int) -> int:
    """Whitney number of the second kind W_m(n, k) by its row recurrence."""
    _check_m(m)
    return get_cache("whitney2", (m,), _whitney2_row(m)).entry(n, k)


def whitney2_binomial_sum(m: int, n: int, k: int) -> int:
    """sum_i C(n,i) m^(i-k) S(i,k)."""
    _check_m(m)
    if k < 0 or k > n:
        return 0
    return sum(binomial(n, i) * m ** (i - k) * stirling2(i, k) for i in range(k, n + 1))


def whitney2_alternating_sum(m: int, n: int, k: int) -> int:
    """(1/(m^k k!)) sum_i C(k,i) (-1)^(k-i) (mi+1)^n, division asserted exact."""
    _check_m(m)
    if k < 0 or k > n:
        return 0
    total = sum(binomial(k, i) * (-1) ** (k - i) * (m * i + 1) ** n for i in range(k + 1))
    d = m**k * factorial(k)
    q, r = divmod(total, d)
    if r:
        raise DivisibilityFailure(f"W_{m}({n},{k}) sum not divisible by {d}", total, d)
    return q


# --- r-Stirling, r-Whitney ---------------------------------------------------

def _r_stirling2_row(r):
    def next_row(n, rows):
        if n < r:
            return [0] * (n + 1)
        if n == r:
            return [1 if k == r else 0 for k in range(n + 1)]
        prev = rows[n - 1]
        return [k * _get(prev, k) + _get(prev, k - 1) for k in range(n + 1)]
    return next_row


def r_stirling2(r: int, n: int, k: int) -> int:
    """r-Stirling number of the second kind {n, k}_r."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if n < r:
        raise IndexBelowR(f"n={n} is below r={r}")
    return get_cache("r_stirling2", (r,), _r_stirling2_row(r)).entry(n, k)


def _r_whitney2_row(m, r):
    def next_row(n, rows):
        return [
            sum(binomial(n, j) * m ** (j - k) * r ** (n - j) * stirling2(j, k) for j in range(k, n + 1))
            for k in range(n + 1)
        ]
    return next_row


def r_whitney2(m: int, r: int, n: int, k: int) -> int:
    """r-Whitney number of the second kind, sum_j C(n,j) m^(j-k) r^(n-j) S(j,k)."""
    _check_m(m)
    if r < 0:
        raise ValueError("r must be non-negative")
    return get_cache("r_whitney2", (m, r), _r_whitney2_row(m, r)).entry(n, k)


# --- Eulerian-Dowling numbers ------------------------------------------------

def _eulerian_dowling_row(m):
    def next_row(n, rows):
        return [
            sum(
                sign(n - i - k) * factorial(i) * binomial(n - i, k) * whitney2(m, n, i)
                for i in range(n - k + 1)
            )
            for k in range(n + 1)
        ]
    return next_row


def eulerian_dowling(m: int, n: int, k: int) -> int:
    """a_m(n, k) = sum_i (-1)^(n-i-k) i! C(n-i, k) W_m(n, i)."""
    _check_m(m)
    return get_cache("eulerian_dowling", (m,), _eulerian_dowling_row(m)).entry(n, k)


# --- Gessel R-polynomials ----------------------------------------------------

def _r_triangle_row(m, t):
    def next_row(n, rows):
        if n == 0:
            return [1]
        # row n from rows n-1 and n-2, with p = n - 1 in the recurrence
        p = n - 1
        prev = rows[p]
        prev2 = rows[p - 1] if p >= 1 else ()
        coeff = (1 + t) + m * p
        out = []
        for k in range(n + 1):
            v = _get(prev, k - 1) - coeff * _get(prev, k) - m * p * t * _get(prev2, k)
            out.append(norm(v))
        return out
    return next_row


def r_triangle(n: int, k: int, m_spec=None, t_spec=1):
    """R_{n,k}^{(m)}(t) by its three-term recurrence.

    At most one of ``m_spec`` and ``t_spec`` may be a polynomial (a formal
    variable); the other must be rational.  ``m_spec=None`` means m formal.
    """
    if m_spec is None:
        m_spec = Poly.variable("m")
    if isinstance(m_spec, Poly) and isinstance(t_spec, Poly):
        raise TwoFormalVariables("m and t cannot both be formal")
    return get_cache("r_triangle", (m_spec, t_spec), _r_triangle_row(m_spec, t_spec)).entry(n, k)


def r_triangle_explicit(n: int, k: int, m: int, t):
    """sum_j (-1)^j C(n,j) w_m(n-j,k) t^j for a concrete integer m."""
    acc = 0
    tj = 1
    for j in range(n + 1):
        acc = acc + (-1) ** j * binomial(n, j) * whitney1(m, n - j, k) * tj
        tj = tj * t
    return norm(acc) if not isinstance(acc, Poly) else acc


def _check_m(m):
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be an integer >= 1, got {m!r}")


__all__ = [
    "TriangleCache",
    "stirling1",
    "stirling2",
    "stirling2_explicit",
    "eulerian",
    "whitney1",
    "whitney1_explicit",
    "whitney2",
    "whitney2_binomial_sum",
    "whitney2_alternating_sum",
    "r_stirling2",
    "r_whitney2",
    "eulerian_dowling",
    "r_triangle",
    "r_triangle_explicit",
]
