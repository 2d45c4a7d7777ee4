#!/usr/bin/env python3
"""Tour of the three number triangles and their exact cross-checks.

Lah numbers count partitions of a set into nonempty ordered lists; the two
Stirling kinds convert between monomials and falling factorials. All three
are built from recurrences and cached, and we check them against independent
closed forms and inversion identities in exact integer arithmetic.
"""

from math import factorial

from lahbell import (
    lah_number,
    lah_number_closed_form,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
)

print("Lah triangle (rows 0..6)")
for n in range(7):
    print(" ", [lah_number(n, k) for k in range(n + 1)])

print("\nSigned Stirling, first kind (rows 0..6)")
for n in range(7):
    print(" ", [stirling1_signed(n, k) for k in range(n + 1)])

print("\nStirling, second kind (rows 0..6)")
for n in range(7):
    print(" ", [stirling2(n, k) for k in range(n + 1)])

print("\nClosed form vs recurrence for Lah numbers, n <= 20:")
mismatches = sum(
    lah_number(n, k) != lah_number_closed_form(n, k)
    for n in range(21)
    for k in range(n + 1)
)
print("  mismatches:", mismatches)

print("\nStirling inversion sum_k S1(n,k) S2(k,m) = delta(n,m), n,m <= 12:")
worst = max(
    abs(sum(stirling1_signed(n, k) * stirling2(k, m) for k in range(n + 1)) - (n == m))
    for n in range(13)
    for m in range(13)
)
print("  max deviation:", worst)

print("\nRow sums of |S1| recover n!:")
for n in range(8):
    total = sum(stirling1_unsigned(n, k) for k in range(n + 1))
    print(f"  n={n}: {total} == {factorial(n)}")
