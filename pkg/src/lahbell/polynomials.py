"""The four polynomial families and their exact basis transforms.

Bell polynomials (second-kind Stirling coefficients) and Lah-Bell polynomials
(Lah coefficients) live in the plain variable x. Their degenerate deformations
are polynomials in the substituted variable y = x/(1 + lam*x): representing
them in y keeps every coefficient identity an exact rational comparison, and
evaluating at a point x is a separate, explicit substitution step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import EvaluationError, LengthError
from .exact_core import (
    RationalLike,
    as_rational,
    degenerate_falling_factorial,
    lah_number,
    stirling1_signed,
    stirling2,
)


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense univariate polynomial with exact rational coefficients.

    `variable` is "x" for the plain families and "y" for the degenerate ones,
    where y stands for x/(1 + lam*x). Trailing zero coefficients are trimmed
    so equal polynomials compare equal structurally.
    """

    coefficients: tuple[Fraction, ...]
    variable: str = "x"

    def __post_init__(self) -> None:
        coeffs = tuple(as_rational(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (Fraction(0),)
        object.__setattr__(self, "coefficients", coeffs)
        if self.variable not in ("x", "y"):
            raise ValueError("variable must be 'x' or 'y'")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def evaluate(self, value: RationalLike) -> Fraction:
        value = as_rational(value)
        out = Fraction(0)
        for c in reversed(self.coefficients):
            out = out * value + c
        return out

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if self.variable != other.variable:
            raise ValueError("cannot add polynomials in different variables")
        size = max(len(self.coefficients), len(other.coefficients))
        return RationalPolynomial(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)),
            self.variable,
        )

    def scaled(self, factor: RationalLike) -> "RationalPolynomial":
        factor = as_rational(factor)
        return RationalPolynomial(tuple(factor * c for c in self.coefficients), self.variable)


def monomial(n: int, variable: str = "x") -> RationalPolynomial:
    """The single-term polynomial variable**n."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return RationalPolynomial((Fraction(0),) * n + (Fraction(1),), variable)


def bell_polynomial(n: int) -> RationalPolynomial:
    """sum_k S2(n, k) x**k, whose value at 1 is the Bell number."""
    return RationalPolynomial(tuple(Fraction(stirling2(n, k)) for k in range(n + 1)))


def bell_number(n: int) -> int:
    """Number of set partitions of an n-set."""
    return sum(stirling2(n, k) for k in range(n + 1))


def lah_bell_polynomial(n: int) -> RationalPolynomial:
    """sum_k L(n, k) x**k, the ordered-list analogue of the Bell polynomial."""
    return RationalPolynomial(tuple(Fraction(lah_number(n, k)) for k in range(n + 1)))


def lah_bell_number(n: int) -> int:
    """Partitions of an n-set into nonempty linearly ordered lists (any count)."""
    return sum(lah_number(n, k) for k in range(n + 1))


def y_substitution(x: RationalLike, lam: RationalLike) -> Fraction:
    """The substituted variable y = x/(1 + lam*x)."""
    x = as_rational(x)
    lam = as_rational(lam)
    denom = 1 + lam * x
    if denom == 0:
        raise EvaluationError("substitution undefined: 1 + lam*x = 0")
    return x / denom


def evaluate_degenerate(poly: RationalPolynomial, x: RationalLike, lam: RationalLike) -> Fraction:
    """Evaluate a y-variable polynomial at the point y = x/(1 + lam*x)."""
    if poly.variable != "y":
        raise ValueError("expected a polynomial in the substituted variable y")
    return poly.evaluate(y_substitution(x, lam))


def degenerate_bell_polynomial(n: int, lam: RationalLike) -> RationalPolynomial:
    """Degenerate Bell polynomial in y: sum_k (1)(1-lam)...(1-(k-1)lam) S2(n, k) y**k."""
    lam = as_rational(lam)
    coeffs = tuple(
        degenerate_falling_factorial(1, k, lam) * stirling2(n, k) for k in range(n + 1)
    )
    return RationalPolynomial(coeffs, "y")


def degenerate_lah_bell_polynomial(n: int, lam: RationalLike) -> RationalPolynomial:
    """Degenerate Lah-Bell polynomial in y, built from the double Stirling sum.

    The y**l coefficient is (sum_{k=l..n} (-1)**(n-k) S1(n,k) S2(k,l)) times
    the degenerate factor (1)(1-lam)...(1-(l-1)lam).
    """
    lam = as_rational(lam)
    coeffs = []
    for l in range(n + 1):
        inner = sum(
            (-1) ** (n - k) * stirling1_signed(n, k) * stirling2(k, l)
            for k in range(l, n + 1)
        )
        coeffs.append(degenerate_falling_factorial(1, l, lam) * inner)
    return RationalPolynomial(tuple(coeffs), "y")


def degenerate_lah_bell_polynomial_via_bell(n: int, lam: RationalLike) -> RationalPolynomial:
    """Same polynomial assembled the other way: a signed S1 combination of
    degenerate Bell polynomials. Must agree with the double-sum construction
    coefficient by coefficient; the verification suite checks exactly that.
    """
    lam = as_rational(lam)
    out = RationalPolynomial((Fraction(0),), "y")
    for k in range(n + 1):
        weight = (-1) ** (n - k) * stirling1_signed(n, k)
        if weight:
            out = out + degenerate_bell_polynomial(k, lam).scaled(weight)
    return out


def lahbell_from_bell(n: int, bell_values: Sequence[RationalLike]) -> Fraction:
    """Signed first-kind Stirling transform: sum_k (-1)**(n-k) S1(n,k) v[k].

    Sends Bell-polynomial values to Lah-Bell values (and their degenerate
    counterparts likewise) at a common argument.
    """
    if len(bell_values) < n + 1:
        raise LengthError(f"need {n + 1} values, got {len(bell_values)}")
    return sum(
        (Fraction((-1) ** (n - k) * stirling1_signed(n, k)) * as_rational(bell_values[k])
         for k in range(n + 1)),
        Fraction(0),
    )


def bell_from_lahbell_degenerate(n: int, lahbell_values: Sequence[RationalLike]) -> Fraction:
    """Inverse transform: sum_k (-1)**(n-k) S2(n,k) v[k].

    Recovers (degenerate) Bell values from (degenerate) Lah-Bell values; the
    round trip through both transforms is the identity.
    """
    if len(lahbell_values) < n + 1:
        raise LengthError(f"need {n + 1} values, got {len(lahbell_values)}")
    return sum(
        (Fraction((-1) ** (n - k) * stirling2(n, k)) * as_rational(lahbell_values[k])
         for k in range(n + 1)),
        Fraction(0),
    )


def lah_bell_series_coefficients(x: RationalLike, order: int) -> list[Fraction]:
    """Lah-Bell values [B_0(x), ..., B_order(x)] from the generating function.

    Computes exp(x*(1/(1-t) - 1)) by exact formal power-series composition and
    rescales the t**n coefficient by n!. This path never touches the Lah
    triangle, so it serves as an independent oracle for the triangle-based
    construction.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    x = as_rational(x)
    # h = x*(t + t^2 + ...); F = exp(h) satisfies F[n] = (1/n) sum_{k=1..n} k h[k] F[n-k]
    series = [Fraction(1)] + [Fraction(0)] * order
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += k * x * series[n - k]
        series[n] = acc / n
    out = []
    factorial = 1
    for n in range(order + 1):
        out.append(series[n] * factorial)
        factorial *= n + 1
    return out
