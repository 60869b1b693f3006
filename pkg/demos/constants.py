"""
The Lobachevsky function and the two volume constants
======================================================

Evaluates L(x) with its error bound, the octahedron and tetrahedron
volumes, and the closed-form antiprism and Loebell volumes.
"""
import math

from rightangled import lobachevsky, v3, v8, vol_antiprism, vol_loebell

for x in (0.0, math.pi / 6, math.pi / 4, math.pi / 3, math.pi / 2):
    r = lobachevsky(x)
    print(f"L({x:.6f}) = {r.value:+.15f}  +- {r.abs_err:.1e}")

print()
print(f"v8 = 8 L(pi/4) = {v8().value:.12f}")
print(f"v3 = 3 L(pi/3) = {v3().value:.12f}")
print(f"v3 - 2 L(pi/6) = {v3().value - 2 * lobachevsky(math.pi / 6).value:.1e}")

print()
for n in (3, 4, 5, 10, 50):
    a = vol_antiprism(n)
    # the volume per vertex climbs towards v8/4
    print(f"Vol(A({n:2d})) = {a.value:12.9f}   per vertex {a.value / (2 * n):.9f}")
print(f"v8 / 4       = {v8().value / 4:.9f}")
for n in (5, 6, 8, 20):
    print(f"Vol(L({n:2d})) = {vol_loebell(n).value:12.9f}")
