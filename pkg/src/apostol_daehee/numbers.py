"""Classical sequences: Stirling numbers of the first kind, Daehee and Cauchy
numbers, falling factorials, Bernstein basis values and Chu-Vandermonde sums."""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import reduce
from numbers import Rational
from typing import TypeVar

T = TypeVar("T")


class StirlingTable:
    """Signed Stirling numbers of the first kind, grown row by row on demand.

    Rows are appended under a lock and never modified afterwards, so readers
    always see either a complete row or none.
    """

    def __init__(self):
        self._rows: list[tuple[Fraction, ...]] = [(Fraction(1),)]
        self._lock = threading.Lock()

    def _grow(self, n: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= n:
                m = len(rows) - 1
                prev = rows[m]
                # S1(m+1, k) = -m S1(m, k) + S1(m, k-1)
                row = [Fraction(0)] * (m + 2)
                for k in range(1, m + 2):
                    left = prev[k] if k <= m else 0
                    row[k] = -m * left + prev[k - 1]
                rows.append(tuple(row))

    def row(self, n: int) -> tuple[Fraction, ...]:
        if n >= len(self._rows):
            self._grow(n)
        return self._rows[n]

    def __call__(self, n: int, k: int) -> Fraction:
        if n < 0 or k < 0:
            raise ValueError("Stirling indices must be non-negative")
        if k > n:
            return Fraction(0)
        return self.row(n)[k]


_STIRLING = StirlingTable()


def stirling1(n: int, k: int) -> Fraction:
    """Signed Stirling number of the first kind ``S1(n, k)``."""
    return _STIRLING(n, k)


def falling_factorial(x0: T, n: int) -> T:
    """``x0 (x0 - 1) ... (x0 - n + 1)``; works for rationals and for :class:`XPoly`."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    one = x0 * 0 + 1
    return reduce(lambda acc, i: acc * (x0 - i), range(n), one)


def gbinom(x0: Rational | int, k: int) -> Fraction:
    """Generalized binomial coefficient ``(x0)_k / k!``; zero for k < 0."""
    if k < 0:
        return Fraction(0)
    return Fraction(falling_factorial(Fraction(x0), k), math.factorial(k))


def daehee(n: int) -> Fraction:
    """Daehee number ``(-1)^n n! / (n + 1)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Fraction((-1) ** n * math.factorial(n), n + 1)


def cauchy(n: int) -> Fraction:
    """Cauchy number (Bernoulli number of the second kind) ``b_n(0)``.

    Computed as ``sum_m S1(n, m) / (m + 1)``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum((stirling1(n, m) / (m + 1) for m in range(n + 1)), Fraction(0))


def bernstein(k: int, n: int, x0: Rational | int) -> Fraction:
    """Bernstein basis value ``C(n, k) x0^k (1 - x0)^(n - k)``; 0 when k > n."""
    if k < 0 or n < 0:
        raise ValueError("indices must be non-negative")
    if k > n:
        return Fraction(0)
    x0 = Fraction(x0)
    return math.comb(n, k) * x0**k * (1 - x0) ** (n - k)


def chu_vandermonde_lhs_rhs(x0: Rational | int, y0: Rational | int, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of ``C(x0 + y0, n) = (1/n!) sum_k C(n, k) (x0)_k (y0)_{n-k}``."""
    x0, y0 = Fraction(x0), Fraction(y0)
    lhs = gbinom(x0 + y0, n)
    rhs = sum(
        (math.comb(n, k) * falling_factorial(x0, k) * falling_factorial(y0, n - k) for k in range(n + 1)),
        Fraction(0),
    ) / math.factorial(n)
    return lhs, rhs
