"""Volume bounds for right-angled hyperbolic polyhedra.

Every bound is a rational combination ``a*v8 + b*v3`` of the two constants
(apex bounds also use other Lobachevsky values), so the formulas below keep
their coefficients as exact fractions and only round when the constants enter.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .andreev import RealizabilityKind, classify
from .lobachevsky import ErrBoundedValue, lobachevsky, v3, v8
from .polytope import (CombinatorialPolytope, PolytopeError, profile,
                       quasi_adjacent_count)


class BoundId(enum.Enum):
    """Every bound the report knows, in report order.

    Each member carries its side (lower/upper), whether the inequality is
    strict as published, and a short description of its source and formula.
    """

    IDEAL_LOWER_ATKINSON = ("lower", False, "Atkinson, ideal: (v8/4)V - v8/2")
    IDEAL_UPPER_ATKINSON = ("upper", False, "Atkinson, ideal: (v8/2)V - 2v8")
    IDEAL_UPPER_V9 = ("upper", False, "ideal, V >= 9: (v8/2)V - 5v8/2")
    IDEAL_UPPER_V24 = ("upper", False, "ideal, V > 24: (v8/2)V - 3v8")
    IDEAL_UPPER_FACE_DEGREE = ("upper", False, "ideal, k-gonal face: (v8/2)V - ((k+5)/4)v8")
    IDEAL_UPPER_TRI_QUAD = ("upper", False,
                            "ideal, only 3/4-gons, V >= 73: (v8/2)V - (9v8 - 20v3)")
    IDEAL_APEX_VERTEX = ("upper", False, "ideal, cones over vertices: (V - 4 - m/2)(v8/2)")
    IDEAL_APEX_FACE = ("upper", False, "ideal, cones over faces from an apex")
    COMPACT_LOWER_ATKINSON = ("lower", False, "Atkinson, compact: (v8/32)V - v8/4")
    COMPACT_UPPER_ATKINSON = ("upper", True, "Atkinson, compact: (5v3/8)V - (25/4)v3")
    COMPACT_UPPER_V24 = ("upper", False, "compact, V >= 24: (5v3/8)V - (35/4)v3")
    COMPACT_UPPER_V80 = ("upper", False, "compact, V > 80: (5v3/8)V - 10v3")
    COMPACT_UPPER_FACE_DEGREE = ("upper", False,
                                 "compact, k-gonal face: (5v3/8)V - ((5k+35)/8)v3")
    COMPACT_UPPER_FACE_TRIPLE = ("upper", False,
                                 "compact, face chain f1-f2-f3: (V - k1 - k2 - k3 + 4)(5v3/8)")
    MIXED_LOWER_ATKINSON = ("lower", False,
                            "Atkinson, finite volume: (v8/8)Vi + (v8/32)Vf - v8/4")
    MIXED_UPPER_ATKINSON = ("upper", True,
                            "Atkinson, finite volume: (v8/2)Vi + (5v3/8)Vf - v8/2")
    MIXED_UPPER_V15 = ("upper", True,
                       "finite volume, Vi + Vf > 15: (v8/2)Vi + (5v3/8)Vf - (v8 + 5v3/2)")

    def __init__(self, side: str, strict: bool, description: str):
        self.side = side
        self.strict = strict
        self.description = description

    @property
    def label(self) -> str:
        return self.name.lower()


def combo(a, b=0) -> ErrBoundedValue:
    """a*v8 + b*v3 for exact rationals a, b."""
    return Fraction(a) * v8() + Fraction(b) * v3()


@lru_cache(maxsize=None)
def lob_pi_over(q: int) -> ErrBoundedValue:
    """L(pi/q) for a positive integer q."""
    return lobachevsky(math.pi / q, 2.3e-16)


# -- ideal -------------------------------------------------------------------

def ideal_atkinson(V: int) -> tuple[ErrBoundedValue, ErrBoundedValue]:
    if V < 6:
        raise ValueError(f"no ideal right-angled polyhedron has V = {V} < 6")
    return combo(Fraction(V, 4) - Fraction(1, 2)), combo(Fraction(V, 2) - 2)


def ideal_upper_v9(V: int) -> ErrBoundedValue:
    if V < 9:
        raise ValueError(f"bound needs V >= 9, got {V}")
    return combo(Fraction(V, 2) - Fraction(5, 2))


def ideal_upper_improved(V: int, max_face_k: int,
                         only_34_faces: bool) -> list[tuple[BoundId, ErrBoundedValue]]:
    """The three vertex-count bounds for ideal polyhedra, those that apply."""
    if V < 6:
        raise ValueError(f"no ideal right-angled polyhedron has V = {V} < 6")
    out = []
    if V > 24:
        out.append((BoundId.IDEAL_UPPER_V24, combo(Fraction(V, 2) - 3)))
    if max_face_k >= 3:
        out.append((BoundId.IDEAL_UPPER_FACE_DEGREE,
                    combo(Fraction(V, 2) - Fraction(max_face_k + 5, 4))))
    if only_34_faces and V >= 73:
        out.append((BoundId.IDEAL_UPPER_TRI_QUAD, combo(Fraction(V, 2) - 9, 20)))
    return out


def _require_ideal(P: CombinatorialPolytope) -> None:
    if classify(P).kind is not RealizabilityKind.IDEAL:
        raise PolytopeError("apex bounds need an ideal right-angled polyhedron")


def apex_vertex_value(V: int, m: int) -> ErrBoundedValue:
    """(V - 4 - m/2) * v8/2."""
    return combo((V - 4 - Fraction(m, 2)) / 2)


def apex_vertex_bound(P: CombinatorialPolytope, apex: int) -> ErrBoundedValue:
    _require_ideal(P)
    return apex_vertex_value(P.n_vertices, quasi_adjacent_count(P, apex))


@dataclass(frozen=True)
class ApexFaceTerm:
    face: int
    degree: int
    quasi_incident: bool
    degenerate: bool
    value: ErrBoundedValue


def apex_face_terms(P: CombinatorialPolytope, apex: int) -> list[ApexFaceTerm]:
    """Cone bound for each face not containing the apex.

    A face quasi-incident to the apex contributes (k-1) L(pi/(2k-2)), any
    other face k L(pi/k).  ``degenerate`` marks faces sharing edges with two
    or more faces at the apex.
    """
    P.check_vertex(apex)
    at_apex = set(P.vertex_faces[apex])
    terms = []
    for f in range(P.n_faces):
        if f in at_apex:
            continue
        k = P.face_degree(f)
        touching = at_apex & P.face_edge_neighbours[f].keys()
        if touching:
            val = (k - 1) * lob_pi_over(2 * k - 2)
        else:
            val = k * lob_pi_over(k)
        terms.append(ApexFaceTerm(f, k, bool(touching), len(touching) >= 2, val))
    return terms


def apex_face_bound(P: CombinatorialPolytope, apex: int) -> ErrBoundedValue:
    _require_ideal(P)
    return sum((t.value for t in apex_face_terms(P, apex)), ErrBoundedValue(0.0))


@dataclass(frozen=True)
class ApexBound:
    apex: int
    method: str  # "vertex" or "face"
    value: ErrBoundedValue
    degenerate: bool = False


def _smaller(cand: ApexBound, best: Optional[ApexBound]) -> bool:
    # values whose error intervals overlap count as ties
    return best is None or cand.value.upper < best.value.lower


def _best_apex_by_method(P: CombinatorialPolytope, method: str) -> ApexBound:
    best = None
    for v in range(P.n_vertices):
        if method == "vertex":
            cand = ApexBound(v, "vertex",
                             apex_vertex_value(P.n_vertices, quasi_adjacent_count(P, v)))
        else:
            terms = apex_face_terms(P, v)
            cand = ApexBound(v, "face", sum((t.value for t in terms), ErrBoundedValue(0.0)),
                             any(t.degenerate for t in terms))
        if _smaller(cand, best):
            best = cand
    return best


def best_apex_bound(P: CombinatorialPolytope) -> ApexBound:
    """Smallest apex bound over all vertices and both cone decompositions.

    Ties go to the smaller vertex id, then to the vertex method.
    """
    _require_ideal(P)
    vb = _best_apex_by_method(P, "vertex")
    fb = _best_apex_by_method(P, "face")
    if fb.value.upper < vb.value.lower:
        return fb
    if vb.value.upper < fb.value.lower:
        return vb
    return min(vb, fb, key=lambda b: (b.apex, b.method != "vertex"))


# -- compact -----------------------------------------------------------------

def compact_bounds(V: int, max_face_k: int) -> list[tuple[BoundId, ErrBoundedValue]]:
    if not (V == 20 or V >= 24):
        raise ValueError(f"no compact right-angled polytope has V = {V}")
    slope = Fraction(5, 8)
    out = [
        (BoundId.COMPACT_LOWER_ATKINSON, combo(Fraction(V, 32) - Fraction(1, 4))),
        (BoundId.COMPACT_UPPER_ATKINSON, combo(0, slope * V - Fraction(25, 4))),
    ]
    if V >= 24:
        out.append((BoundId.COMPACT_UPPER_V24, combo(0, slope * V - Fraction(35, 4))))
    if V > 80:
        out.append((BoundId.COMPACT_UPPER_V80, combo(0, slope * V - 10)))
    if max_face_k >= 5:
        out.append((BoundId.COMPACT_UPPER_FACE_DEGREE,
                    combo(0, slope * V - Fraction(5 * max_face_k + 35, 8))))
    return out


def face_triple_bound(V: int, k1: int, k2: int, k3: int) -> ErrBoundedValue:
    """(V - k1 - k2 - k3 + 4) * 5v3/8 for a chain of faces f1 - f2 - f3."""
    if V < 20 or min(k1, k2, k3) < 5:
        raise ValueError("face-chain bound needs V >= 20 and faces with >= 5 sides")
    return combo(0, Fraction(5, 8) * (V - k1 - k2 - k3 + 4))


def best_face_triple(P: CombinatorialPolytope) -> tuple[int, int, int]:
    """Faces (f1, f2, f3), f2 sharing an edge with both, maximising k1 + k2 + k3."""
    nb = P.face_edge_neighbours
    best_key, best = None, None
    for f2 in range(P.n_faces):
        ns = sorted(nb[f2])
        for f1 in ns:
            for f3 in ns:
                if f3 == f1:
                    continue
                s = P.face_degree(f1) + P.face_degree(f2) + P.face_degree(f3)
                key = (-s, (f1, f2, f3))
                if best_key is None or key < best_key:
                    best_key, best = key, (f1, f2, f3)
    return best


# -- mixed -------------------------------------------------------------------

def mixed_bounds(V_inf: int, V_F: int) -> list[tuple[BoundId, ErrBoundedValue]]:
    if V_inf < 0 or V_F < 0 or V_inf + V_F == 0:
        raise ValueError("vertex counts must be non-negative and not both zero")
    lower = combo(Fraction(V_inf, 8) + Fraction(V_F, 32) - Fraction(1, 4))
    upper = combo(Fraction(V_inf, 2) - Fraction(1, 2), Fraction(5 * V_F, 8))
    out = [(BoundId.MIXED_LOWER_ATKINSON, lower), (BoundId.MIXED_UPPER_ATKINSON, upper)]
    if V_inf + V_F > 15:
        out.append((BoundId.MIXED_UPPER_V15,
                    combo(Fraction(V_inf, 2) - 1, Fraction(5 * V_F, 8) - Fraction(5, 2))))
    return out


def doubling_series_term(i: int, k_inf: int, k_F: int) -> ErrBoundedValue:
    """c_i = v8/2^(i+1) * k_inf + 5v3/2^(i+2) * k_F, for stage i >= 1."""
    if i < 1:
        raise ValueError("stages are numbered from 1")
    return combo(Fraction(k_inf, 2 ** (i + 1)), Fraction(5 * k_F, 2 ** (i + 2)))


def doubling_series_bound(V_inf: int, V_F: int,
                          stages: Sequence[tuple[int, int]]) -> ErrBoundedValue:
    """Upper bound after n doublings with face vertex counts ``stages``.

    (v8/2)Vi + (5v3/8)Vf - c_1 - ... - c_n - v8/2^(n+1).
    """
    n = len(stages)
    total = combo(Fraction(V_inf, 2) - Fraction(1, 2 ** (n + 1)), Fraction(5 * V_F, 8))
    for i, (ki, kf) in enumerate(stages, start=1):
        total = total - doubling_series_term(i, ki, kf)
    return total


# -- report ------------------------------------------------------------------

@dataclass(frozen=True)
class BoundEntry:
    bound: BoundId
    applicable: bool
    reason: str = ""
    value: Optional[ErrBoundedValue] = None
    detail: str = ""


@dataclass(frozen=True)
class BoundReport:
    name: str
    kind: RealizabilityKind
    entries: tuple[BoundEntry, ...]
    best_upper: BoundEntry
    best_lower: BoundEntry

    def __getitem__(self, bound: BoundId) -> BoundEntry:
        for e in self.entries:
            if e.bound is bound:
                return e
        raise KeyError(bound)

    def applicable(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.applicable]


def bound_report(P: CombinatorialPolytope) -> BoundReport:
    """Evaluate every bound that applies to ``P`` and pick the best ones."""
    real = classify(P)
    if not real.realizable:
        raise PolytopeError(f"{P.name or 'polytope'} is not realizable: {real.witness}")
    prof = profile(P)
    V, k = prof.V, prof.max_face_degree
    found: dict[BoundId, tuple[ErrBoundedValue, str]] = {}

    if real.kind is RealizabilityKind.IDEAL:
        lo, hi = ideal_atkinson(V)
        found[BoundId.IDEAL_LOWER_ATKINSON] = (lo, "")
        found[BoundId.IDEAL_UPPER_ATKINSON] = (hi, "")
        if V >= 9:
            found[BoundId.IDEAL_UPPER_V9] = (ideal_upper_v9(V), "")
        only34 = set(prof.p) <= {3, 4}
        for bid, val in ideal_upper_improved(V, k, only34):
            found[bid] = (val, f"k={k}" if bid is BoundId.IDEAL_UPPER_FACE_DEGREE else "")
        vb = _best_apex_by_method(P, "vertex")
        m = quasi_adjacent_count(P, vb.apex)
        found[BoundId.IDEAL_APEX_VERTEX] = (vb.value, f"apex={vb.apex} m={m}")
        fb = _best_apex_by_method(P, "face")
        note = f"apex={fb.apex}" + (" degenerate-projection unverified" if fb.degenerate else "")
        found[BoundId.IDEAL_APEX_FACE] = (fb.value, note)
    elif real.kind is RealizabilityKind.COMPACT:
        for bid, val in compact_bounds(V, k):
            found[bid] = (val, f"k={k}" if bid is BoundId.COMPACT_UPPER_FACE_DEGREE else "")
        f1, f2, f3 = best_face_triple(P)
        ks = (P.face_degree(f1), P.face_degree(f2), P.face_degree(f3))
        found[BoundId.COMPACT_UPPER_FACE_TRIPLE] = (
            face_triple_bound(V, *ks), f"faces={f1},{f2},{f3} k={ks[0]},{ks[1]},{ks[2]}")
    for bid, val in mixed_bounds(prof.V_inf, prof.V_F):
        found[bid] = (val, "")

    entries = []
    for bid in BoundId:
        if bid in found:
            val, detail = found[bid]
            entries.append(BoundEntry(bid, True, "", val, detail))
        else:
            entries.append(BoundEntry(bid, False, _reason(bid, real.kind, prof)))
    uppers = [e for e in entries if e.applicable and e.bound.side == "upper"]
    lowers = [e for e in entries if e.applicable and e.bound.side == "lower"]
    best_upper = min(uppers, key=lambda e: e.value.value)
    best_lower = max(lowers, key=lambda e: e.value.value)
    return BoundReport(P.name, real.kind, tuple(entries), best_upper, best_lower)


def _reason(bid: BoundId, kind: RealizabilityKind, prof) -> str:
    family = bid.name.split("_")[0]
    if family == "IDEAL" and kind is not RealizabilityKind.IDEAL:
        return "requires an ideal polyhedron"
    if family == "COMPACT" and kind is not RealizabilityKind.COMPACT:
        return "requires a compact polytope"
    return {
        BoundId.IDEAL_UPPER_V9: "requires V >= 9",
        BoundId.IDEAL_UPPER_V24: "requires V > 24",
        BoundId.IDEAL_UPPER_TRI_QUAD: "requires only 3- and 4-gonal faces and V >= 73",
        BoundId.COMPACT_UPPER_V24: "requires V >= 24",
        BoundId.COMPACT_UPPER_V80: "requires V > 80",
        BoundId.MIXED_UPPER_V15: "requires V_inf + V_F > 15",
    }.get(bid, "not applicable")
