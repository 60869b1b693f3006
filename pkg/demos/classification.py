"""
Which face lattices are right-angled hyperbolic?
================================================

Runs the combinatorial realizability test on small polytopes and prints the
witness for every one that fails.
"""
from rightangled import (antiprism, classify, cube, fullerene_c60, loebell, prism, profile,
                         pyramid, split_vertex, tetrahedron)

candidates = [tetrahedron(), prism(3), cube(), prism(5), pyramid(4), pyramid(5),
              antiprism(3), antiprism(4), loebell(5), loebell(7), fullerene_c60(),
              split_vertex(antiprism(6), 0, 0, name="A(6) split at 0")]

for P in candidates:
    r = classify(P)
    prof = profile(P)
    line = f"{P.name:18s} V={prof.V:3d} F={prof.F:3d} p_k={prof.p_summary():24s} {r.kind.value}"
    if r.witness is not None:
        line += f"  <- {r.witness}"
    print(line)
