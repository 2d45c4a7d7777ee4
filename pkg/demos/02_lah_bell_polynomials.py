#!/usr/bin/env python3
"""The four polynomial families and their exact transforms.

Bell polynomials collect second-kind Stirling numbers, Lah-Bell polynomials
collect Lah numbers, and each has a degenerate deformation living in the
substituted variable y = x/(1 + lam*x). A signed first-kind Stirling
transform converts Bell values into Lah-Bell values; a signed second-kind
transform inverts it. A formal power-series composition provides a fully
independent oracle for the Lah-Bell values.
"""

from fractions import Fraction

from lahbell import (
    bell_from_lahbell_degenerate,
    bell_polynomial,
    degenerate_bell_polynomial,
    degenerate_lah_bell_polynomial,
    degenerate_lah_bell_polynomial_via_bell,
    evaluate_degenerate,
    lah_bell_number,
    lah_bell_polynomial,
    lah_bell_series_coefficients,
    lahbell_from_bell,
)

print("Lah-Bell numbers:", [lah_bell_number(n) for n in range(8)])
print("Bell polynomial n=3 coefficients:", bell_polynomial(3).coefficients)
print("Lah-Bell polynomial n=3 coefficients:", lah_bell_polynomial(3).coefficients)
print("Lah-Bell value at x=2, n=3:", lah_bell_polynomial(3).evaluate(2))

print("\nGenerating-function oracle at x=2 (exact series composition):")
print(" ", lah_bell_series_coefficients(2, 5))
print("  triangle path:", [lah_bell_polynomial(n).evaluate(2) for n in range(6)])

print("\nSigned Stirling transform of Bell values at alpha=2:")
bell_values = [bell_polynomial(k).evaluate(2) for k in range(6)]
print("  bell values:   ", bell_values)
print("  transformed:   ", [lahbell_from_bell(n, bell_values[: n + 1]) for n in range(6)])
print("  lahbell direct:", [lah_bell_polynomial(n).evaluate(2) for n in range(6)])

lam = Fraction(1, 2)
print(f"\nDegenerate families at lam = {lam} (variable y = x/(1+lam*x)):")
print("  degenerate Bell n=2:    ", degenerate_bell_polynomial(2, lam).coefficients)
print("  degenerate Lah-Bell n=2:", degenerate_lah_bell_polynomial(2, lam).coefficients)
print(
    "  via-Bell construction:  ",
    degenerate_lah_bell_polynomial_via_bell(2, lam).coefficients,
)
value = evaluate_degenerate(degenerate_lah_bell_polynomial(2, lam), 1, lam)
print("  evaluated at x=1:", value)

print("\nRound trip through both transforms at lam=2/7, x=3/2:")
lam, x = Fraction(2, 7), Fraction(3, 2)
dbell = [evaluate_degenerate(degenerate_bell_polynomial(k, lam), x, lam) for k in range(6)]
forward = [lahbell_from_bell(n, dbell[: n + 1]) for n in range(6)]
back = [bell_from_lahbell_degenerate(n, forward[: n + 1]) for n in range(6)]
print("  original: ", dbell)
print("  recovered:", back)

print("\nClassical limit: degenerate Lah-Bell at n=3, x=1 as lam -> 0")
target = float(lah_bell_polynomial(3).evaluate(1))
for exponent in (2, 4, 6):
    small = Fraction(1, 10**exponent)
    approx = float(evaluate_degenerate(degenerate_lah_bell_polynomial(3, small), 1, small))
    print(f"  lam=1e-{exponent}: value={approx:.10f}  error={abs(approx - target):.3e}")
