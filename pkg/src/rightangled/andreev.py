"""Realizability of a combinatorial type as a right-angled hyperbolic polyhedron.

Andreev's conditions for right angles reduce to four combinatorial checks:
the type is not a tetrahedron or triangular prism, no vertex lies in more than
four faces, and there are no prismatic 3- or 4-circuits of faces.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .polytope import CombinatorialPolytope, Edge, PolytopeError, VertexKind


class WitnessKind(enum.Enum):
    TETRAHEDRON = "Tetrahedron"
    TRIANGULAR_PRISM = "TriangularPrism"
    OVERFULL_VERTEX = "OverfullVertex"
    CONDITION3 = "Condition3"
    CONDITION4 = "Condition4"


@dataclass(frozen=True)
class AndreevWitness:
    kind: WitnessKind
    faces: tuple[int, ...] = ()
    edges: tuple[Edge, ...] = ()
    vertices: tuple[int, ...] = ()

    def __str__(self):
        parts = [self.kind.value]
        if self.faces:
            parts.append("faces=" + ",".join(map(str, self.faces)))
        if self.edges:
            parts.append("edges=" + ",".join(f"{a}-{b}" for a, b in self.edges))
        if self.vertices:
            parts.append("vertices=" + ",".join(map(str, self.vertices)))
        return " ".join(parts)


class RealizabilityKind(enum.Enum):
    COMPACT = "CompactRA"
    IDEAL = "IdealRA"
    MIXED = "MixedRA"
    NOT_REALIZABLE = "NotRealizable"


@dataclass(frozen=True)
class Realizability:
    kind: RealizabilityKind
    witness: Optional[AndreevWitness] = None

    @property
    def realizable(self) -> bool:
        return self.kind is not RealizabilityKind.NOT_REALIZABLE

    def __str__(self):
        if self.witness is None:
            return self.kind.value
        return f"{self.kind.value}({self.witness})"


def _masks(P: CombinatorialPolytope) -> list[int]:
    out = []
    for f in P.faces:
        m = 0
        for v in f:
            m |= 1 << v
        out.append(m)
    return out


def _edge_mask(e: Edge) -> int:
    return (1 << e[0]) | (1 << e[1])


def check_condition3(P: CombinatorialPolytope) -> Optional[AndreevWitness]:
    """First triple (f, f', f'') with f' and f'' meeting f in disjoint edges yet touching each other."""
    P.require_valid()
    masks = _masks(P)
    nb = P.face_edge_neighbours
    for f in range(P.n_faces):
        ns = sorted(nb[f])
        for i, g in enumerate(ns):
            eg = _edge_mask(nb[f][g])
            for h in ns[i + 1:]:
                eh = _edge_mask(nb[f][h])
                if eg & eh:
                    continue
                if masks[g] & masks[h]:
                    return AndreevWitness(WitnessKind.CONDITION3, (f, g, h),
                                          (nb[f][g], nb[f][h]))
    return None


def check_condition4(P: CombinatorialPolytope) -> Optional[AndreevWitness]:
    """First prismatic 4-circuit (f1, f2, f3, f4), in lexicographic order."""
    P.require_valid()
    nb = P.face_edge_neighbours
    emask = [{g: _edge_mask(e) for g, e in nb[f].items()} for f in range(P.n_faces)]
    best = None
    for f1 in range(P.n_faces):
        # group the faces f2 next to f1 by the face f3 across from f1
        between: dict[int, list[int]] = {}
        for f2 in nb[f1]:
            for f3 in nb[f2]:
                if f3 != f1:
                    between.setdefault(f3, []).append(f2)
        m1 = emask[f1]
        for f3, mids in between.items():
            if len(mids) < 2:
                continue
            m3 = emask[f3]
            for f2 in mids:
                e12, e23 = m1[f2], m3[f2]
                for f4 in mids:
                    if f4 == f2:
                        continue
                    e41, e34 = m1[f4], m3[f4]
                    if (e12 & e41) or (e12 & e23) or (e12 & e34) or (e23 & e34) \
                            or (e23 & e41) or (e34 & e41):
                        continue
                    cand = (f1, f2, f3, f4)
                    if best is None or cand < best:
                        best = cand
        if best is not None:
            break
    if best is None:
        return None
    f1, f2, f3, f4 = best
    edges = (nb[f1][f2], nb[f2][f3], nb[f3][f4], nb[f4][f1])
    return AndreevWitness(WitnessKind.CONDITION4, best, edges)


def _degree_signature(P: CombinatorialPolytope) -> tuple[int, int, tuple[int, ...]]:
    return P.n_vertices, P.n_faces, tuple(sorted(len(f) for f in P.faces))


def classify(P: CombinatorialPolytope) -> Realizability:
    """Decide realizability and, when realizable, whether compact, ideal or mixed."""
    P.require_valid()
    sig = _degree_signature(P)
    if sig == (4, 4, (3, 3, 3, 3)):
        return Realizability(RealizabilityKind.NOT_REALIZABLE,
                             AndreevWitness(WitnessKind.TETRAHEDRON, tuple(range(4))))
    if sig == (6, 5, (3, 3, 4, 4, 4)):
        return Realizability(RealizabilityKind.NOT_REALIZABLE,
                             AndreevWitness(WitnessKind.TRIANGULAR_PRISM, tuple(range(5))))
    kinds = [P.kind(v) for v in range(P.n_vertices)]
    if VertexKind.OVERFULL in kinds:
        v = kinds.index(VertexKind.OVERFULL)
        return Realizability(RealizabilityKind.NOT_REALIZABLE,
                             AndreevWitness(WitnessKind.OVERFULL_VERTEX,
                                            P.vertex_faces[v], vertices=(v,)))
    for check in (check_condition3, check_condition4):
        w = check(P)
        if w is not None:
            return Realizability(RealizabilityKind.NOT_REALIZABLE, w)
    has_ideal = VertexKind.IDEAL in kinds
    has_finite = VertexKind.FINITE in kinds
    if has_ideal and has_finite:
        return Realizability(RealizabilityKind.MIXED)
    return Realizability(RealizabilityKind.IDEAL if has_ideal else RealizabilityKind.COMPACT)


def witness_holds(P: CombinatorialPolytope, w: AndreevWitness) -> bool:
    """Re-check a witness against ``P`` without rerunning the search."""
    nb = P.face_edge_neighbours
    if w.kind is WitnessKind.TETRAHEDRON:
        return _degree_signature(P) == (4, 4, (3, 3, 3, 3))
    if w.kind is WitnessKind.TRIANGULAR_PRISM:
        return _degree_signature(P) == (6, 5, (3, 3, 4, 4, 4))
    if w.kind is WitnessKind.OVERFULL_VERTEX:
        return len(w.vertices) == 1 and P.valence(w.vertices[0]) >= 5
    masks = _masks(P)
    if w.kind is WitnessKind.CONDITION3:
        f, g, h = w.faces
        if g not in nb[f] or h not in nb[f]:
            return False
        return (not _edge_mask(nb[f][g]) & _edge_mask(nb[f][h])) and bool(masks[g] & masks[h])
    if w.kind is WitnessKind.CONDITION4:
        fs = w.faces
        if len(set(fs)) != 4:
            return False
        edges = []
        for i in range(4):
            a, b = fs[i], fs[(i + 1) % 4]
            if b not in nb[a]:
                return False
            edges.append(_edge_mask(nb[a][b]))
        return all(not (edges[i] & edges[j]) for i in range(4) for j in range(i + 1, 4))
    raise PolytopeError(f"unknown witness kind {w.kind}")


def require_realizable(P: CombinatorialPolytope) -> Realizability:
    r = classify(P)
    if not r.realizable:
        raise PolytopeError(f"{P.name or 'polytope'} is not realizable: {r.witness}")
    return r
