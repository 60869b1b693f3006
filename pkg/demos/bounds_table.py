"""
Upper and lower volume bounds next to the true volumes
======================================================

For antiprisms and Loebell polytopes the exact volume is known, so the
report's best bounds can be compared with it directly.
"""
from rightangled import antiprism, bound_report, loebell, vol_antiprism, vol_loebell

rows = [(antiprism(n), vol_antiprism(n)) for n in (3, 4, 6, 13, 30)]
rows += [(loebell(n), vol_loebell(n)) for n in (5, 6, 12, 21, 40)]

print(f"{'polytope':8s} {'lower':>12s} {'volume':>12s} {'upper':>12s}  best upper bound")
for P, vol in rows:
    rep = bound_report(P)
    lo, hi = rep.best_lower.value.value, rep.best_upper.value.value
    print(f"{P.name:8s} {lo:12.6f} {vol.value:12.6f} {hi:12.6f}  {rep.best_upper.bound.label}")

print()
print("every bound on A(4):")
for e in bound_report(antiprism(4)).entries:
    if e.applicable:
        print(f"  {e.bound.label:28s} {e.bound.side:5s} {e.value.value:10.6f}  {e.detail}")
