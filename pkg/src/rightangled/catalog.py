"""Named polytope collections used by the verification harness and reports."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .andreev import RealizabilityKind, classify
from .generators import antiprism, contract_edge, loebell, split_vertex
from .lobachevsky import ErrBoundedValue, v8
from .polytope import CombinatorialPolytope
from .surgery import double_along_face, octahedron_chain
from .volumes import vol_antiprism, vol_loebell


@dataclass(frozen=True)
class CatalogEntry:
    polytope: CombinatorialPolytope
    family: str
    known_volume: Optional[ErrBoundedValue] = None

    @property
    def name(self) -> str:
        return self.polytope.name

    @property
    def kind(self) -> RealizabilityKind:
        return classify(self.polytope).kind


def antiprism_entries(lo: int = 3, hi: int = 50) -> list[CatalogEntry]:
    return [CatalogEntry(antiprism(n), "antiprism", vol_antiprism(n)) for n in range(lo, hi + 1)]


def loebell_entries(lo: int = 5, hi: int = 50) -> list[CatalogEntry]:
    return [CatalogEntry(loebell(n), "loebell", vol_loebell(n)) for n in range(lo, hi + 1)]


def octahedron_chain_entries(depth: int = 5) -> list[CatalogEntry]:
    return [CatalogEntry(P, "octahedron-chain", (2 ** i) * v8())
            for i, P in enumerate(octahedron_chain(depth))]


def double_entries(max_n: int = 12) -> list[CatalogEntry]:
    """Doubles of A(n) and L(n) along one face of each symmetry class."""
    out = []
    # face 0 is a base, face 2 a lateral face, for both generators
    for n in range(3, max_n + 1):
        P = antiprism(n)
        for f, tag in ((0, "base"), (2, "lateral")):
            D = double_along_face(P, f, name=f"D(A({n}), {tag})")
            out.append(CatalogEntry(D, "antiprism-double", 2 * vol_antiprism(n)))
    for n in range(5, max_n + 1):
        P = loebell(n)
        for f, tag in ((0, "base"), (2, "lateral")):
            D = double_along_face(P, f, name=f"D(L({n}), {tag})")
            out.append(CatalogEntry(D, "loebell-double", 2 * vol_loebell(n)))
    return out


def mixed_fixtures() -> list[CombinatorialPolytope]:
    """Polyhedra with both ideal and finite vertices.

    Built by splitting vertices of antiprisms and contracting edges of Loebell
    polytopes; only candidates passing the realizability test are kept.
    """
    cands = []
    for n in range(3, 13):
        A = antiprism(n)
        cands.append(split_vertex(A, 0, 0, name=f"A({n}) split 0"))
        cands.append(split_vertex(A, 0, 1, name=f"A({n}) split 0'"))
        if n >= 5:
            two = split_vertex(A, 0, 0)
            cands.append(split_vertex(two, n // 2, 0, name=f"A({n}) split 0,{n // 2}"))
    for n in range(5, 11):
        L = loebell(n)
        cands.append(contract_edge(L, (0, 1), name=f"L({n}) contract base edge"))
        cands.append(contract_edge(L, (0, n), name=f"L({n}) contract spoke"))
    out = []
    for P in cands:
        if classify(P).kind is RealizabilityKind.MIXED:
            out.append(P)
    return out


def mixed_entries() -> list[CatalogEntry]:
    out = [CatalogEntry(P, "mixed") for P in mixed_fixtures()]
    # a double of each fixture along its first face keeps both vertex kinds
    for P in mixed_fixtures()[::3]:
        D = double_along_face(P, 0, name=f"D({P.name}, 0)")
        out.append(CatalogEntry(D, "mixed-double"))
    return out


@lru_cache(maxsize=1)
def default_catalog() -> tuple[CatalogEntry, ...]:
    return tuple(antiprism_entries() + loebell_entries() + octahedron_chain_entries()
                 + double_entries() + mixed_entries())
