"""Successive-ratio convergence, including the cases where it fails.

Constant-coefficient sequences: t(n)/t(n-1) tends to the dominant root.
2-periodic sequences with a != b: the full ratio sequence oscillates, but
the even and odd subsequences and the step-2 ratios each converge.  The
even/odd orientation below is the one brute force confirms; both published
orientations are checked explicitly.

Run:  python demos/04_ratio_convergence.py
"""

from mpmath import mp

from fiblike import (
    adjudicate_parity_assignment,
    asymptotic_fit,
    knacci_spec,
    periodic_spec,
    ratio_limit,
    report_to_csv,
)

print("=" * 72)
print("Fibonacci ratios settle on the golden ratio")
print("=" * 72)
report = ratio_limit(knacci_spec(2), n_max=120)
for n, value in report.samples[:6]:
    print(f"  n={n:<3} ratio={mp.nstr(value, 12)}")
print("  ...")
print(f"  estimate:  {mp.nstr(report.estimate, 25)}")
print(f"  reference: {mp.nstr(report.reference, 25)}")
print(f"  gap:       {mp.nstr(report.gap, 3)}")
print()

print("=" * 72)
print("Fractional 2-periodic example: a=0.2, b=0.3, inits (2, 3)")
print("=" * 72)
g = periodic_spec(("0.2", "0.3"), (2, 3))
full = ratio_limit(g, subsequence="all", n_max=400)
print(f"  full ratio sequence: no analytic limit (reference={full.reference});")
tail = ", ".join(mp.nstr(v, 8) for _, v in full.samples[-4:])
print(f"  its tail oscillates: {tail}")
for sub in ("even", "odd"):
    rep = ratio_limit(g, subsequence=sub, n_max=400)
    print(
        f"  {sub:<5} subsequence -> estimate {mp.nstr(rep.estimate, 10)}, "
        f"reference {mp.nstr(rep.reference, 10)}, gap {mp.nstr(rep.gap, 3)}"
    )
step2 = ratio_limit(g, step=2, n_max=400)
print(f"  step-2 ratios      -> estimate {mp.nstr(step2.estimate, 10)} (limit alpha+1)")
print()

print("Both printed parity orientations, adjudicated against brute force:")
verdict = adjudicate_parity_assignment("0.2", "0.3", (2, 3))
print(f"  even estimate {mp.nstr(verdict['even_estimate'], 10)}, odd estimate {mp.nstr(verdict['odd_estimate'], 10)}")
print(f"  alpha/a = {mp.nstr(verdict['alpha_over_a'], 10)}, alpha/b = {mp.nstr(verdict['alpha_over_b'], 10)}")
for name, ok in verdict["verdicts"].items():
    print(f"  {name:<18} -> {'matches' if ok else 'refuted'}")
print()

print("Equal parameters a=b=0.1 restore a single limit:")
eq = ratio_limit(periodic_spec(("0.1", "0.1"), (2, 3)), n_max=400)
print(f"  estimate {mp.nstr(eq.estimate, 12)} vs closed form (a+sqrt(a^2+4))/2 = {mp.nstr(eq.reference, 12)}")
print()

print("=" * 72)
print("Growth fits: t(n) ~ c * alpha^n")
print("=" * 72)
fit = asymptotic_fit(knacci_spec(2))
print(f"  Fibonacci: c = {mp.nstr(fit.c, 15)} (this is 1/sqrt(5))")
print("  residual envelope (block maxima of |t(n)/alpha^n - c|):")
for n, value in fit.residual_trend[-5:]:
    print(f"    through n={n}: {mp.nstr(value, 3)}")
print()

print("Plot data comes out as CSV (here: first lines of the even-ratio series):")
csv = report_to_csv(ratio_limit(g, subsequence="even", n_max=40), 12)
print("\n".join(csv.splitlines()[:6]))
