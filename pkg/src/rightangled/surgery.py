"""Doubling a right-angled polyhedron across one of its faces.

Gluing P to its mirror image along a face f removes f.  Trivalent vertices of
f disappear (the two copies of the remaining edge at such a vertex join into
one edge), vertices of f lying in four faces are shared by both copies, and
each face sharing an edge with f merges with its mirror image.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence, Union

from .polytope import (CombinatorialPolytope, PolytopeError, face_neighbours,
                       ideal_triangle)


class SurgeryError(PolytopeError):
    """The doubled face list failed validation."""


def _rotate_to_edge(face: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    """Rotate ``face`` to start at ``b`` and end at ``a``, where a-b is an edge of it."""
    k = len(face)
    i = face.index(a)
    if face[(i + 1) % k] == b:
        # a -> b runs forward, so walking forward from b ends at a
        j = (i + 1) % k
        return face[j:] + face[:j]
    if face[i - 1] == b:
        rev = face[::-1]
        j = rev.index(b)
        return rev[j:] + rev[:j]
    raise PolytopeError(f"{a}-{b} is not an edge of face {face}")


def double_along_face(P: CombinatorialPolytope, f: int,
                      name: str | None = None) -> CombinatorialPolytope:
    """Combinatorial double of ``P`` across face ``f``.

    Copy A keeps the source ids; copy B uses ``id + V``.  Vertices of ``f``
    in four faces keep their copy A id in both copies, trivalent vertices of
    ``f`` are deleted, and the surviving ids are then renumbered in order.
    """
    P.require_valid()
    P.check_face(f)
    V = P.n_vertices
    face = P.faces[f]
    shared = {v for v in face if P.valence(v) == 4}
    deleted = {v for v in face if P.valence(v) == 3}
    if len(shared) + len(deleted) != len(face):
        raise PolytopeError(f"face {f} has a vertex in five or more faces")

    def mirror(v: int) -> int:
        return v if v in shared else v + V

    merged_with = P.face_edge_neighbours[f]
    raw_faces: list[tuple[int, ...]] = []
    for g, cyc in enumerate(P.faces):
        if g == f or g in merged_with:
            continue
        raw_faces.append(cyc)
    for g, cyc in enumerate(P.faces):
        if g == f or g in merged_with:
            continue
        raw_faces.append(tuple(mirror(v) for v in reversed(cyc)))
    for g in sorted(merged_with):
        a, b = merged_with[g]
        path = _rotate_to_edge(P.faces[g], a, b)  # b ... a
        inner = [mirror(v) for v in reversed(path[1:-1])]
        cyc = [v for v in path if v not in deleted]
        cyc.extend(inner)
        raw_faces.append(tuple(cyc))

    used = sorted({v for c in raw_faces for v in c})
    relabel = {v: i for i, v in enumerate(used)}
    faces = [tuple(relabel[v] for v in c) for c in raw_faces]
    out = CombinatorialPolytope(faces, name=name or f"D({P.name}, {f})")
    if not out.validation.ok:
        raise SurgeryError(f"double of {P.name} along face {f} is invalid: "
                           + "; ".join(map(str, out.validation.violations)))
    return out


def face_vertex_kinds(P: CombinatorialPolytope, f: int) -> tuple[int, int]:
    """(number of ideal, number of finite) vertices on face ``f``."""
    face = P.faces[f]
    k_inf = sum(1 for v in face if P.valence(v) == 4)
    return k_inf, sum(1 for v in face if P.valence(v) == 3)


# -- face selectors ----------------------------------------------------------

def first_valid(P: CombinatorialPolytope) -> int:
    return 0


def max_degree(P: CombinatorialPolytope) -> int:
    return max(range(P.n_faces), key=lambda i: (P.face_degree(i), -i))


def all_triangle_neighbours(P: CombinatorialPolytope) -> int:
    """Smallest triangle whose edge-neighbours are all triangles."""
    for i, face in enumerate(P.faces):
        if len(face) == 3 and all(P.face_degree(g) == 3 for g in P.face_edge_neighbours[i]):
            return i
    raise PolytopeError(f"{P.name} has no triangle surrounded by triangles")


def n6_non_ideal_triangle(P: CombinatorialPolytope) -> int:
    """Smallest face with six or more neighbours that is not an ideal triangle."""
    for i in sorted(n6_faces(P)):
        if not ideal_triangle(P, i):
            return i
    raise PolytopeError(f"{P.name} has no face in N6 other than ideal triangles")


SELECTORS: dict[str, Callable[[CombinatorialPolytope], int]] = {
    "first-valid": first_valid,
    "max-degree": max_degree,
    "all-triangle-neighbours": all_triangle_neighbours,
    "n6-non-ideal-triangle": n6_non_ideal_triangle,
}

Selector = Union[str, Callable[[CombinatorialPolytope], int], Sequence[int]]


@dataclass
class DoublingChain:
    """P^1 = P, P^2, ..., with the face doubled at each stage."""

    polytopes: list[CombinatorialPolytope]
    faces: list[int] = field(default_factory=list)
    k_ideal: list[int] = field(default_factory=list)
    k_finite: list[int] = field(default_factory=list)

    def __iter__(self) -> Iterator[CombinatorialPolytope]:
        return iter(self.polytopes)

    def __len__(self):
        return len(self.polytopes)

    def __getitem__(self, i):
        return self.polytopes[i]

    @property
    def stages(self) -> list[tuple[int, int]]:
        return list(zip(self.k_ideal, self.k_finite))


def double_chain(P: CombinatorialPolytope, depth: int,
                 face_selector: Selector = "first-valid") -> DoublingChain:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if isinstance(face_selector, str):
        try:
            pick = SELECTORS[face_selector]
        except KeyError:
            raise ValueError(f"unknown face selector {face_selector!r}; "
                             f"choose from {sorted(SELECTORS)}") from None
    elif callable(face_selector):
        pick = face_selector
    else:
        explicit = list(face_selector)
        if len(explicit) < depth:
            raise ValueError(f"explicit selector lists {len(explicit)} faces, need {depth}")
        pick = None

    chain = DoublingChain([P])
    cur = P
    for i in range(depth):
        f = explicit[i] if pick is None else pick(cur)
        ki, kf = face_vertex_kinds(cur, f)
        chain.faces.append(f)
        chain.k_ideal.append(ki)
        chain.k_finite.append(kf)
        base = P.name or "P"
        cur = double_along_face(cur, f, name=f"{base} double^{i + 1}")
        chain.polytopes.append(cur)
    return chain


def octahedron_chain(depth: int) -> DoublingChain:
    """Repeated doubles of the octahedron along triangles ringed by triangles."""
    from .generators import antiprism

    octa = antiprism(3)
    octa = CombinatorialPolytope(octa.faces, name="octahedron")
    return double_chain(octa, depth, "all-triangle-neighbours")


def n6_faces(P: CombinatorialPolytope) -> set[int]:
    """Faces with at least six neighbouring faces."""
    P.require_valid()
    return {i for i in range(P.n_faces) if face_neighbours(P, i) >= 6}
