"""Characteristic roots and closed forms.

The dominant positive root governs growth; with the dominance ordering
q1 >= ... >= qk >= 1 it sits in (q1, q1+1) and every other root stays
inside the unit circle.  For unit coefficients there are closed forms: a
full-spectrum sum and a one-root nearest-integer shortcut.

Run:  python demos/03_roots_and_closed_forms.py
"""

from mpmath import mp

from fiblike import (
    all_roots,
    charpoly_of,
    dominant_root,
    dresden_exact_sum,
    dresden_round,
    horadam_binet,
    horadam_spec,
    knacci_constant,
    knacci_spec,
    terms,
)

print("=" * 72)
print("Dominant roots")
print("=" * 72)
poly = charpoly_of(knacci_spec(2))
print(f"  {poly}  ->  {mp.nstr(dominant_root(poly), 30)}  (golden ratio)")
poly = charpoly_of(knacci_spec(3))
print(f"  {poly}  ->  {mp.nstr(dominant_root(poly), 30)}")
poly = charpoly_of(horadam_spec(3, (3, 2, 1)))
alpha = dominant_root(poly)
print(f"  {poly}  ->  {mp.nstr(alpha, 30)}  (inside (3, 4) as ordered coefficients demand)")
print()

print("Growth constants of the k-step family climb toward 2:")
for k in range(2, 11):
    print(f"  k={k:>2}: {mp.nstr(knacci_constant(k), 20)}")
print("  (each solves x + x^(-k) = 2 on (1, 2))")
print()

print("=" * 72)
print("Full spectrum: everything but the dominant root sits in the unit disk")
print("=" * 72)
roots = all_roots(charpoly_of(horadam_spec(4, (4, 3, 2, 1))))
print(f"  dominant: {mp.nstr(roots.dominant, 25)}")
for z in roots.others:
    print(f"  other: {mp.nstr(z, 8)}   |z| = {mp.nstr(abs(z), 10)}")
print(f"  max non-dominant modulus: {mp.nstr(roots.moduli_bound, 10)}")
print(f"  inside unit circle: {roots.inside_unit_circle}, residual: {mp.nstr(roots.residual, 3)}")
print()

print("=" * 72)
print("Closed forms for unit coefficients")
print("=" * 72)
row = terms(knacci_spec(4), 12)
print(f"  exact 4-step row: {row}")
spectral = [mp.nstr(dresden_exact_sum(4, n), 12) for n in range(2, 8)]
print(f"  spectral sum, n=2..7: {spectral}")
rounded = [dresden_round(4, n) for n in range(12)]
print(f"  nearest-integer one-root shortcut: {rounded}")
print(f"  shortcut equals exact row: {rounded == [int(v) for v in row]}")
print()
print("With arbitrary initial terms the spectral sum still lands on the exact value:")
print(f"  inits (1,2,3), n=5 -> {mp.nstr(dresden_exact_sum(3, 5, (1, 2, 3)), 12)} (exact value 20)")
print()

print("=" * 72)
print("Order-2 Binet values")
print("=" * 72)
print(f"  Fibonacci F(9)  via roots of x^2-x-1:  {mp.nstr(horadam_binet(1, 1, 9), 12)}")
print(f"  Pell     P(4)  via roots of x^2-2x-1: {mp.nstr(horadam_binet(2, 1, 4), 12)}")
