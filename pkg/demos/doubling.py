"""
Doubling across faces
=====================

Gluing a polyhedron to its mirror image along a face gives a new
right-angled polyhedron of twice the volume.  Repeating it on the octahedron
yields the chain with 6, 9, 15, 27, 51, 99 vertices.
"""
from rightangled import (antiprism, classify, double_along_face, double_chain, loebell,
                         octahedron_chain, profile)

for P in octahedron_chain(5):
    prof = profile(P)
    print(f"{P.name:40.40s} V={prof.V:3d} p_k={prof.p_summary():12s} {classify(P).kind.value}")

print()
D = double_along_face(loebell(5), 0)
prof = profile(D)
print(f"dodecahedron doubled across a pentagon: V={prof.V}, F={prof.F}, p_k={prof.p_summary()}")

chain = double_chain(antiprism(5), 3, "max-degree")
for stage, (P, f) in enumerate(zip(chain, chain.faces), start=1):
    ki, kf = chain.stages[stage - 1]
    print(f"stage {stage}: V={P.n_vertices:3d}, double face {f} "
          f"({ki} ideal and {kf} finite vertices on it)")
print(f"final: V={chain[-1].n_vertices}")
