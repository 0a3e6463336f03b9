"""Decomposition identities: arbitrary-initial-term sequences written as
initial-term-weighted combinations of shifted basis sequences.

Every check returns a witness (lhs, rhs, per-term breakdown, holds flag), so
formulas whose printed indexing is questionable get adjudicated by brute
force instead of being trusted.

Run:  python demos/02_decomposition_identities.py
"""

from fiblike import (
    RecurrenceSpec,
    decompose_canonical,
    decompose_horadam_like,
    decompose_knacci_like,
    decompose_periodic2,
    decompose_periodic2_edson,
    decompose_periodic3,
    decompose_periodic_k,
    dump_witness,
    horadam_spec,
    periodic2_swap_relation,
)

print("=" * 72)
print("Order 2: the canonical basis split  S(n) = S1*F(n) + S0*F(n-1)")
print("=" * 72)
w = decompose_canonical((2, 1), 5)
print(f"  Lucas L(5): lhs={w.lhs}, rhs={w.rhs}, holds={w.holds}")
for t in w.terms:
    print(f"    {t.coefficient} * {t.label} = {t.value}")
print()

print("=" * 72)
print("Order k: split over the k-step basis")
print("=" * 72)
spec = RecurrenceSpec(k=3, coeffs=(1, 1, 1), inits=(1, 2, 3))
w = decompose_knacci_like(spec, 5)
print(f"  inits (1,2,3), n=5: lhs={w.lhs} rhs={w.rhs} holds={w.holds}")
for t in w.terms:
    print(f"    {t.coefficient} * [{t.label}] = {t.value}")
print()

print("Weighted recurrences work the same way with q-weighted blocks:")
w = decompose_horadam_like(horadam_spec(3, (3, 2, 1)), (1, 0, 2), 6)
print(f"  q=(3,2,1), inits (1,0,2), n=6: lhs={w.lhs} holds={w.holds}")
print()

print("=" * 72)
print("2-periodic: two equivalent splits plus the parameter-swap relation")
print("=" * 72)
w1 = decompose_periodic2(2, 3, (1, 1), 4)
w2 = decompose_periodic2_edson(2, 3, (1, 1), 4)
print(f"  swapped-basis form:  rhs = {w1.rhs}  ({', '.join(t.label for t in w1.terms)})")
print(f"  rescaled-basis form: rhs = {w2.rhs}  ({', '.join(t.label for t in w2.terms)})")
ws = periodic2_swap_relation(2, 3, 5)
print(f"  swap relation at n=5: F[b,a](4) = {ws.lhs} = (3/2) * F[a,b](4) -> holds={ws.holds}")
print()
print("A witness serializes to JSON for tooling:")
print(dump_witness(w1))
print()

print("=" * 72)
print("Ternary and k-ary splits: brute force adjudicates the printed shifts")
print("=" * 72)
w = decompose_periodic3(1, 2, 3, (1, 0, 0), 6)
print(f"  ternary, inits (1,0,0), n=6: holds={w.holds}")
print("  (the repeated rotated tuple in the middle weight is correct as printed)")
print()
ok = all(
    decompose_periodic_k((1, 2, 3, 4), (0, 1, 0, 0), n, variant="printed").holds
    for n in range(4, 30)
)
print(f"  k-ary printed indexing, n=4..29: all hold = {ok}")
bad = decompose_periodic_k((1, 2, 3, 4), (0, 1, 0, 0), 8, variant="shift-from-zero")
print(
    f"  shift-from-zero variant at n=8: lhs={bad.lhs} rhs={bad.rhs} holds={bad.holds}"
    "  <- refuted, so the printed indexing is the right one"
)
