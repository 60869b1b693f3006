"""
Checking the combinatorial claims over the built-in catalog
===========================================================

Every claim is either confirmed with a witness, marked not applicable, or
reported as failing.  A failure would be a counterexample.
"""
from collections import Counter

from rightangled import verify_suite

results = verify_suite("all")
tally = Counter((r.claim, r.verdict) for r in results)
for claim in sorted({c for c, _ in tally}):
    counts = {v: n for (c, v), n in tally.items() if c == claim}
    print(f"{claim:30s} " + "  ".join(f"{v}={n}" for v, n in sorted(counts.items())))

print()
for r in results:
    if r.claim == "ideal-triangle-free-vertex" and r.verdict == "holds":
        print(r.line())
print(f"{sum(r.failed for r in results)} failures in {len(results)} checks")
