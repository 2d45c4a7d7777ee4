"""Degenerate binomial and degenerate Poisson random variables.

Both families take exact rational parameters and reduce to the classical
binomial / Poisson distributions at lam = 0. Everything over a finite support
is computed in exact rational arithmetic; floats appear only for irrational
normalizers (exp, non-integer powers) and truncated infinite sums.

For some parameter choices the mass formulas go negative. The algebraic
identities (normalization, moments, generating functions) hold for the signed
measure regardless, so moment routines work unconditionally, while
`analyze_support` reports the sign pattern and samplers refuse signed regimes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterator, Optional, Union

from .errors import ConvergenceError, DomainError
from .exact_core import (
    RationalLike,
    as_rational,
    binomial_coefficient,
    degenerate_exp_eval,
    degenerate_exp_exact,
    degenerate_falling_factorial,
    falling_factorial,
    format_rational,
    rising_factorial,
)
from .polynomials import bell_polynomial, lah_bell_polynomial

# Truncation policy for infinite-support sums: stop once the current term has
# been below tol * (accumulated absolute sum) for several consecutive terms.
# A plain next-term bound is unsafe near the convergence radius.
TRUNCATION_TOL = 1e-14
TERM_BUDGET = 100_000
_CONSECUTIVE_SMALL = 5


class MomentKind(str, Enum):
    RAW = "raw"
    FALLING = "falling"
    RISING = "rising"


@dataclass(frozen=True)
class SupportAnalysis:
    """Finiteness, cutoff, and sign pattern of a distribution's masses.

    `negative_indices` lists indices with provably negative mass within the
    inspection horizon; when the measure is signed but the first negative
    index lies beyond the horizon, that first index is still included so the
    report is never silently optimistic.
    """

    finite: bool
    cutoff: Optional[int]
    all_nonnegative: bool
    negative_indices: tuple[int, ...]


@dataclass(frozen=True)
class DegenerateBinomial:
    """Number of successes in n trials under the degenerate mass formula.

    Masses are C(n,i) (p)(p-lam)... (1-p)(1-p-lam)... divided by the
    normalizer (1)(1-lam)...(1-(n-1)lam). At lam = 0 this is the classical
    binomial distribution. Construction fails when the normalizer vanishes
    (lam = 1/j for some 1 <= j <= n-1).
    """

    n: int
    p: Fraction
    lam: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 0:
            raise ValueError("n must be a nonnegative integer")
        p = as_rational(self.p)
        lam = as_rational(self.lam)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "lam", lam)
        if not 0 <= p <= 1:
            raise DomainError(f"p must lie in [0, 1], got {format_rational(p)}")
        if not 0 <= lam < 1:
            raise DomainError(f"lam must lie in [0, 1), got {format_rational(lam)}")
        if degenerate_falling_factorial(1, self.n, lam) == 0:
            raise DomainError(
                f"normalizer vanishes: lam = {format_rational(lam)} is 1/j for some j < n"
            )

    @property
    def normalizer(self) -> Fraction:
        return degenerate_falling_factorial(1, self.n, self.lam)

    @property
    def finite_support(self) -> bool:
        return True

    @property
    def support_cutoff(self) -> int:
        """Last index with nonzero mass."""
        for i in range(self.n, -1, -1):
            if self.pmf(i) != 0:
                return i
        return 0

    def pmf(self, i: int) -> Fraction:
        if i < 0:
            raise ValueError("index must be nonnegative")
        if i > self.n:
            return Fraction(0)
        return (
            binomial_coefficient(self.n, i)
            * degenerate_falling_factorial(self.p, i, self.lam)
            * degenerate_falling_factorial(1 - self.p, self.n - i, self.lam)
            / self.normalizer
        )

    def masses(self) -> list[Fraction]:
        return [self.pmf(i) for i in range(self.n + 1)]

    def mean(self) -> Fraction:
        """Closed form n*p*(1-lam)(1-2*lam).../normalizer; zero for n = 0."""
        if self.n == 0:
            return Fraction(0)
        return (
            self.n
            * self.p
            * degenerate_falling_factorial(1 - self.lam, self.n - 1, self.lam)
            / self.normalizer
        )

    def variance(self) -> Fraction:
        """Closed form for n >= 2; the leading factor there has no meaning for
        n in {0, 1}, so those cases fall back to the exact support sum."""
        if self.n <= 1:
            mean = self.raw_moment(1)
            return self.raw_moment(2) - mean * mean
        mean = self.mean()
        return (
            self.n
            * self.p
            * degenerate_falling_factorial(1 - 2 * self.lam, self.n - 2, self.lam)
            * ((self.n - 1) * self.p + 1 - self.n * self.lam - mean * (1 - self.lam))
            / self.normalizer
        )

    def raw_moment(self, m: int) -> Fraction:
        """Exact sum of i**m over the support masses."""
        if m < 0:
            raise ValueError("moment order must be nonnegative")
        return sum(
            (Fraction(i) ** m * mass for i, mass in enumerate(self.masses())),
            Fraction(0),
        )

    def falling_factorial_moment(self, m: int) -> Fraction:
        return moment_direct(self, MomentKind.FALLING, m)

    def rising_factorial_moment(self, m: int) -> Fraction:
        return moment_direct(self, MomentKind.RISING, m)

    def mgf(self, t: Union[float, RationalLike]) -> float:
        """Moment generating function at t, a float evaluation boundary."""
        t_float = float(t) if isinstance(t, float) else float(as_rational(t))
        return sum(math.exp(i * t_float) * float(mass) for i, mass in enumerate(self.masses()))

    def pgf(self, t: RationalLike) -> Fraction:
        """Expectation of (1/(1-t))**X, exact over the finite support."""
        u = _pgf_argument(t)
        total = Fraction(0)
        power = Fraction(1)
        for mass in self.masses():
            total += power * mass
            power *= u
        return total


@dataclass(frozen=True)
class DegeneratePoisson:
    """Count variable with masses proportional to alpha**i (1)(1-lam).../i!.

    The support is finite, {0, ..., m}, exactly when 1/lam is an integer m;
    then every mass is an exact nonnegative rational. At lam = 0 this is the
    classical Poisson distribution (infinite support, float masses). For
    other lam the masses eventually change sign and the defining series is a
    binomial series, so construction requires alpha*lam < 1.
    """

    alpha: Fraction
    lam: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        alpha = as_rational(self.alpha)
        lam = as_rational(self.lam)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "lam", lam)
        if alpha <= 0:
            raise DomainError(f"alpha must be positive, got {format_rational(alpha)}")
        if not 0 <= lam < 1:
            raise DomainError(f"lam must lie in [0, 1), got {format_rational(lam)}")
        if lam != 0 and (1 / lam).denominator != 1 and alpha * lam >= 1:
            raise DomainError(
                "infinite-support instance needs alpha*lam < 1 for its series to converge"
            )

    @property
    def finite_support(self) -> bool:
        return self.lam != 0 and (1 / self.lam).denominator == 1

    @property
    def support_cutoff(self) -> Optional[int]:
        if self.finite_support:
            return int(1 / self.lam)
        return None

    @property
    def classical(self) -> bool:
        return self.lam == 0

    def _unnormalized_mass(self, i: int) -> Fraction:
        if i < 0:
            raise ValueError("index must be nonnegative")
        return (
            self.alpha**i
            * degenerate_falling_factorial(1, i, self.lam)
            / math.factorial(i)
        )

    def _exact_normalizer(self) -> Fraction:
        return degenerate_exp_exact(-1, self.alpha, self.lam)

    def pmf(self, i: int) -> Union[Fraction, float]:
        """Exact rational on a finite support, float otherwise."""
        if self.finite_support:
            return self._exact_normalizer() * self._unnormalized_mass(i)
        if self.classical:
            return math.exp(-float(self.alpha)) * float(self._unnormalized_mass(i))
        return degenerate_exp_eval(-1, self.alpha, self.lam) * float(self._unnormalized_mass(i))

    def masses(self) -> list[Fraction]:
        """Exact mass table; only defined for finite support."""
        cutoff = self.support_cutoff
        if cutoff is None:
            raise DomainError("exact mass table requires a finite support")
        norm = self._exact_normalizer()
        return [norm * self._unnormalized_mass(i) for i in range(cutoff + 1)]

    def _float_mass_stream(self) -> Iterator[float]:
        """Infinite-support masses, built incrementally in float."""
        alpha = float(self.alpha)
        lam = float(self.lam)
        if self.classical:
            mass = math.exp(-alpha)
        else:
            mass = degenerate_exp_eval(-1, self.alpha, self.lam)
        i = 0
        while True:
            yield mass
            mass = mass * alpha * (1 - i * lam) / (i + 1)
            i += 1

    def mean(self) -> Fraction:
        return self.alpha / (1 + self.alpha * self.lam)

    def variance(self) -> Fraction:
        return self.alpha / (1 + self.alpha * self.lam) ** 2

    def mean_variance(self) -> tuple[Fraction, Fraction]:
        return self.mean(), self.variance()

    def raw_moment(self, m: int) -> Union[Fraction, float]:
        """Bell-polynomial value at alpha in the classical case (exact), exact
        support sum when finite, truncated float series otherwise."""
        if m < 0:
            raise ValueError("moment order must be nonnegative")
        if self.classical:
            return bell_polynomial(m).evaluate(self.alpha)
        return moment_direct(self, MomentKind.RAW, m)

    def falling_factorial_moment(self, m: int) -> Union[Fraction, float]:
        """alpha**m in the classical case; direct expectation otherwise."""
        if m < 0:
            raise ValueError("moment order must be nonnegative")
        if self.classical:
            return self.alpha**m
        return moment_direct(self, MomentKind.FALLING, m)

    def rising_factorial_moment(self, m: int) -> Union[Fraction, float]:
        """Lah-Bell polynomial value at alpha in the classical case; direct
        expectation otherwise."""
        if m < 0:
            raise ValueError("moment order must be nonnegative")
        if self.classical:
            return lah_bell_polynomial(m).evaluate(self.alpha)
        return moment_direct(self, MomentKind.RISING, m)

    def pgf(self, t: RationalLike) -> Union[Fraction, float]:
        """Expectation of (1/(1-t))**X via the closed form.

        Exact rational when the support is finite; float through exp /
        degenerate exponentials otherwise.
        """
        u = _pgf_argument(t)
        if self.finite_support:
            base = 1 + self.lam * self.alpha * u
            if base <= 0:
                raise DomainError("generating-function argument outside the domain")
            m = self.support_cutoff
            return (base / (1 + self.lam * self.alpha)) ** m
        if self.classical:
            return math.exp(float(self.alpha * (u - 1)))
        return degenerate_exp_eval(-1, self.alpha, self.lam) * degenerate_exp_eval(
            1, self.alpha * u, self.lam
        )


Distribution = Union[DegenerateBinomial, DegeneratePoisson]


def poisson(alpha: RationalLike) -> DegeneratePoisson:
    """Classical Poisson distribution as the lam = 0 member of the family."""
    return DegeneratePoisson(as_rational(alpha), Fraction(0))


def binomial(n: int, p: RationalLike) -> DegenerateBinomial:
    """Classical binomial distribution as the lam = 0 member of the family."""
    return DegenerateBinomial(n, as_rational(p), Fraction(0))


def _pgf_argument(t: RationalLike) -> Fraction:
    t = as_rational(t)
    if abs(t) >= 1:
        raise DomainError("generating-function argument requires |t| < 1")
    return 1 / (1 - t)


def _exact_kind_value(kind: MomentKind, order: int, i: int) -> Fraction:
    if kind is MomentKind.RAW:
        return Fraction(i) ** order
    if kind is MomentKind.FALLING:
        return falling_factorial(i, order)
    return rising_factorial(i, order)


def _float_kind_value(kind: MomentKind, order: int, i: int) -> float:
    if kind is MomentKind.RAW:
        return float(i) ** order
    out = 1.0
    step = -1.0 if kind is MomentKind.FALLING else 1.0
    for j in range(order):
        out *= i + step * j
    return out


def moment_direct(
    d: Distribution,
    kind: MomentKind,
    order: int,
    *,
    tol: float = TRUNCATION_TOL,
    max_terms: int = TERM_BUDGET,
) -> Union[Fraction, float]:
    """Expectation of the chosen power kind straight from the masses.

    Exact over a finite support. Over an infinite support the sum is a float,
    truncated by the consecutive-small-terms rule; raises ConvergenceError if
    the term budget runs out first. This is the brute-force side of every
    closed-form moment identity, so it deliberately avoids the closed forms.
    """
    if order < 0:
        raise ValueError("moment order must be nonnegative")
    kind = MomentKind(kind)
    if d.finite_support:
        return sum(
            (_exact_kind_value(kind, order, i) * mass for i, mass in enumerate(d.masses())),
            Fraction(0),
        )
    return _truncated_sum(
        d, lambda i: _float_kind_value(kind, order, i), tol=tol, max_terms=max_terms
    )


def pgf_direct(
    d: Distribution,
    t: RationalLike,
    *,
    tol: float = TRUNCATION_TOL,
    max_terms: int = TERM_BUDGET,
) -> Union[Fraction, float]:
    """Expectation of (1/(1-t))**X summed directly over the masses.

    Cross-check companion to the closed-form `pgf` methods.
    """
    u = _pgf_argument(t)
    if d.finite_support:
        total = Fraction(0)
        power = Fraction(1)
        for mass in d.masses():
            total += power * mass
            power *= u
        return total
    u_float = float(u)
    return _truncated_sum(d, lambda i: u_float**i, tol=tol, max_terms=max_terms)


def _truncated_sum(
    d: DegeneratePoisson,
    weight: Callable[[int], float],
    *,
    tol: float,
    max_terms: int,
) -> float:
    total = 0.0
    total_abs = 0.0
    small_run = 0
    stream = d._float_mass_stream()
    for i in range(max_terms):
        try:
            term = weight(i) * next(stream)
        except OverflowError as exc:
            raise ConvergenceError("sum diverged; outside the series' domain") from exc
        total += term
        total_abs += abs(term)
        if not math.isfinite(total):
            raise ConvergenceError("sum diverged; outside the series' domain")
        if total_abs > 0 and abs(term) < tol * total_abs:
            small_run += 1
            if small_run >= _CONSECUTIVE_SMALL:
                return total
        else:
            small_run = 0
    raise ConvergenceError(f"no convergence within {max_terms} terms at tol {tol}")


def _first_negative_index(d: DegeneratePoisson) -> int:
    """First index with negative mass for a signed degenerate Poisson.

    The mass sign equals the sign of the degenerate factor product, which
    turns negative as soon as exactly one factor 1 - j*lam is negative.
    """
    return math.floor(1 / d.lam) + 2


def analyze_support(d: Distribution, horizon: int = 64) -> SupportAnalysis:
    """Report finiteness, cutoff, and mass sign pattern of a distribution.

    Signs are decided in exact arithmetic. For finite supports the
    nonnegativity verdict covers the whole support regardless of horizon; for
    infinite supports it is the provable global answer (classical Poisson is
    nonnegative, any other infinite-support instance is signed).
    """
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    if d.finite_support:
        masses = d.masses()
        cutoff = 0
        for i in range(len(masses) - 1, -1, -1):
            if masses[i] != 0:
                cutoff = i
                break
        negatives = tuple(
            i for i in range(min(horizon, cutoff) + 1) if masses[i] < 0
        )
        all_nonnegative = all(mass >= 0 for mass in masses)
        if not all_nonnegative and not negatives:
            negatives = (next(i for i, mass in enumerate(masses) if mass < 0),)
        return SupportAnalysis(True, cutoff, all_nonnegative, negatives)
    if d.classical:
        return SupportAnalysis(False, None, True, ())
    scan = min(horizon, _first_negative_index(d)) + 1
    negatives = tuple(
        i
        for i in range(scan)
        if degenerate_falling_factorial(1, i, d.lam) < 0
    )
    if not negatives:
        negatives = (_first_negative_index(d),)
    return SupportAnalysis(False, None, False, negatives)
