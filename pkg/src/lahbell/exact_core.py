"""Exact rational arithmetic, generalized factorials, and memoized number triangles.

Everything in this module is integer or `fractions.Fraction` work. The Lah
and Stirling triangles are built row by row from their recurrences and cached;
the closed form for Lah numbers is kept around as an independent cross-check.
Floating point appears only in `degenerate_exp_eval`, which is an explicit
evaluation boundary.
"""

from __future__ import annotations

import math
import threading
from enum import Enum
from fractions import Fraction
from typing import Union

from .errors import DomainError

RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, "a/b" strings, and Fractions to an exact Fraction.

    Floats are rejected: silently converting them would smuggle binary
    rounding into results that are contractually exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction, int, or 'a/b' string")
    return Fraction(value)


def format_rational(value: RationalLike) -> str:
    """Canonical "a/b" string; the denominator is omitted when it is 1."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _check_order(n: int) -> None:
    if n < 0:
        raise ValueError("order must be a nonnegative integer")


def falling_factorial(x: RationalLike, n: int) -> Fraction:
    """x(x-1)...(x-n+1), the empty product 1 when n = 0."""
    _check_order(n)
    x = as_rational(x)
    out = Fraction(1)
    for j in range(n):
        out *= x - j
    return out


def rising_factorial(x: RationalLike, n: int) -> Fraction:
    """x(x+1)...(x+n-1), the empty product 1 when n = 0."""
    _check_order(n)
    x = as_rational(x)
    out = Fraction(1)
    for j in range(n):
        out *= x + j
    return out


def degenerate_falling_factorial(x: RationalLike, n: int, lam: RationalLike) -> Fraction:
    """x(x-lam)(x-2*lam)...(x-(n-1)*lam); reduces to x**n at lam = 0."""
    _check_order(n)
    x = as_rational(x)
    lam = as_rational(lam)
    out = Fraction(1)
    for j in range(n):
        out *= x - j * lam
    return out


def binomial_coefficient(n: int, k: int) -> int:
    """C(n, k); zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial_coefficient requires nonnegative arguments")
    return math.comb(n, k)


class TriangleKind(Enum):
    LAH = "lah"
    STIRLING1_SIGNED = "stirling1"
    STIRLING2 = "stirling2"


# next_row[k] = prev[k-1] + weight(n, k) * prev[k], building row n+1 from row n
_ROW_WEIGHTS = {
    TriangleKind.LAH: lambda n, k: n + k,
    TriangleKind.STIRLING1_SIGNED: lambda n, k: -n,
    TriangleKind.STIRLING2: lambda n, k: k,
}


class TriangleCache:
    """Grow-only lower-triangular integer table built from a two-term recurrence.

    Row 0 is always (1,); entries outside 0 <= k <= n are implicitly 0.
    Published rows are immutable tuples. Row construction is serialized by a
    lock, so concurrent readers never observe a partially built row.
    """

    def __init__(self, kind: TriangleKind):
        self.kind = kind
        self._weight = _ROW_WEIGHTS[kind]
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ValueError("row index must be nonnegative")
        if n >= len(self._rows):
            with self._lock:
                while n >= len(self._rows):
                    top = len(self._rows) - 1
                    prev = self._rows[top]
                    weight = self._weight
                    nxt = tuple(
                        (prev[k - 1] if 1 <= k <= top + 1 else 0)
                        + weight(top, k) * (prev[k] if k <= top else 0)
                        for k in range(top + 2)
                    )
                    self._rows.append(nxt)
        return self._rows[n]

    def value(self, n: int, k: int) -> int:
        if n < 0:
            raise ValueError("row index must be nonnegative")
        if k < 0 or k > n:
            return 0
        return self.row(n)[k]


LAH_TRIANGLE = TriangleCache(TriangleKind.LAH)
STIRLING1_TRIANGLE = TriangleCache(TriangleKind.STIRLING1_SIGNED)
STIRLING2_TRIANGLE = TriangleCache(TriangleKind.STIRLING2)


def lah_number(n: int, k: int) -> int:
    """Partitions of an n-set into k nonempty linearly ordered lists."""
    return LAH_TRIANGLE.value(n, k)


def lah_number_closed_form(n: int, k: int) -> int:
    """C(n-1, k-1) * n!/k!; independent cross-check for the cached triangle."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return binomial_coefficient(n - 1, k - 1) * math.factorial(n) // math.factorial(k)


def stirling1_signed(n: int, k: int) -> int:
    """Coefficient of x**k in the falling factorial x(x-1)...(x-n+1)."""
    return STIRLING1_TRIANGLE.value(n, k)


def stirling1_unsigned(n: int, k: int) -> int:
    """|signed value|; nonzero entries carry sign (-1)**(n-k), so this is cheap."""
    return abs(stirling1_signed(n, k))


def stirling2(n: int, k: int) -> int:
    """Partitions of an n-set into k nonempty blocks."""
    return STIRLING2_TRIANGLE.value(n, k)


def degenerate_exp_eval(x: RationalLike, t: RationalLike, lam: RationalLike) -> float:
    """(1 + lam*t) ** (x/lam) as a float; exp(x*t) in the lam = 0 limit."""
    x = as_rational(x)
    t = as_rational(t)
    lam = as_rational(lam)
    if lam == 0:
        return math.exp(float(x * t))
    base = 1 + lam * t
    if base <= 0:
        raise DomainError(f"degenerate exponential needs 1 + lam*t > 0, got {format_rational(base)}")
    return float(base) ** float(x / lam)


def degenerate_exp_exact(x: RationalLike, t: RationalLike, lam: RationalLike) -> Fraction:
    """Exact value of the degenerate exponential when the exponent x/lam is an integer."""
    x = as_rational(x)
    t = as_rational(t)
    lam = as_rational(lam)
    if lam == 0:
        if x * t == 0:
            return Fraction(1)
        raise DomainError("no exact rational value at lam = 0 unless x*t = 0")
    exponent = x / lam
    if exponent.denominator != 1:
        raise DomainError("x/lam is not an integer; use degenerate_exp_eval for a float")
    base = 1 + lam * t
    if base <= 0:
        raise DomainError(f"degenerate exponential needs 1 + lam*t > 0, got {format_rational(base)}")
    return base ** exponent.numerator


def degenerate_exp_series(x: RationalLike, t: RationalLike, lam: RationalLike, order: int) -> Fraction:
    """Exact partial sum of the defining series, sum_{k<=order} (x)(x-lam)... t**k / k!.

    Independent of the closed form above; used to check the two against each
    other inside the series' radius of convergence.
    """
    _check_order(order)
    x = as_rational(x)
    t = as_rational(t)
    lam = as_rational(lam)
    term = Fraction(1)
    total = Fraction(1)
    for k in range(order):
        term = term * (x - k * lam) * t / (k + 1)
        total += term
    return total
