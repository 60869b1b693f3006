"""Machine checks of the combinatorial claims and bound consistency over catalogs.

Each check returns a :class:`ClaimResult` whose verdict is ``holds``,
``fails`` or ``not applicable``.  A check never runs its conclusion on a
polytope outside its hypotheses; those get ``not applicable``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .andreev import RealizabilityKind, classify
from .bounds import bound_report
from .catalog import CatalogEntry, default_catalog
from .polytope import (CombinatorialPolytope, avg_face_neighbours, avg_quasi_adjacent,
                       avg_quasi_adjacent_formula, avg_quasi_incident,
                       avg_quasi_incident_formula, edge_face_degree_sum, face_neighbours,
                       face_reach, ideal_triangle, mean_face_neighbours, profile,
                       quasi_adjacent_count, quasi_incident_vertices, triangle_free_vertex)
from .surgery import (DoublingChain, double_along_face, double_chain, face_vertex_kinds,
                      n6_faces)

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not applicable"


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    population: str
    verdict: str
    witness: str = ""
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.verdict == FAILS

    def line(self) -> str:
        parts = [self.claim, self.population, self.verdict]
        if self.witness:
            parts.append(f"witness={self.witness}")
        if self.detail:
            parts.append(self.detail)
        return "\t".join(parts)


def _result(claim, P, ok, witness="", detail=""):
    return ClaimResult(claim, P.name, HOLDS if ok else FAILS, witness, detail)


def _na(claim, P, why):
    return ClaimResult(claim, P.name, NOT_APPLICABLE, detail=why)


# -- ideal -------------------------------------------------------------------

def verify_quasi_adjacent(P: CombinatorialPolytope) -> ClaimResult:
    """Ideal, V > 24: some vertex has at least 4 quasi-adjacent vertices."""
    claim = "ideal-quasi-adjacent-4"
    if classify(P).kind is not RealizabilityKind.IDEAL or P.n_vertices <= 24:
        return _na(claim, P, "needs an ideal polyhedron with V > 24")
    counts = [quasi_adjacent_count(P, v) for v in range(P.n_vertices)]
    best = max(counts)
    witness = counts.index(best)
    avg = avg_quasi_adjacent(P)
    formula = avg_quasi_adjacent_formula(profile(P))
    floor = 4 - Fraction(24, P.n_vertices)
    ok = best >= 4 and avg == formula and avg >= floor > 3
    return _result(claim, P, ok, f"v{witness}",
                   f"quasi-adjacent={best} average={avg} closed-form={formula}")


def verify_triangle_free(P: CombinatorialPolytope) -> ClaimResult:
    """Ideal, V > 72, faces only 3/4-gons: a vertex avoids all triangles."""
    claim = "ideal-triangle-free-vertex"
    prof = profile(P)
    if (classify(P).kind is not RealizabilityKind.IDEAL or prof.V <= 72
            or max(prof.p) >= 5):
        return _na(claim, P, "needs an ideal polyhedron with V > 72 and only 3/4-gons")
    reach = [len(face_reach(P, f)) for f in range(P.n_faces) if P.face_degree(f) == 3]
    v = triangle_free_vertex(P)
    ok = v is not None and prof.p.get(3) == 8 and max(reach) <= 9
    return _result(claim, P, ok, f"v{v}", f"max vertices reached by a triangle={max(reach)}")


# -- compact -----------------------------------------------------------------

def verify_fat_edge(P: CombinatorialPolytope) -> ClaimResult:
    """Compact, V > 80: an edge with >= 14 quasi-incident vertices, face sum >= 24."""
    claim = "compact-edge-14"
    if classify(P).kind is not RealizabilityKind.COMPACT or P.n_vertices <= 80:
        return _na(claim, P, "needs a compact polytope with V > 80")
    best_e, best_q = None, -1
    for e in P.edges:
        q = quasi_incident_vertices(P, e)
        if q > best_q:
            best_e, best_q = e, q
    ksum = edge_face_degree_sum(P, best_e)
    avg = avg_quasi_incident(P)
    formula = avg_quasi_incident_formula(profile(P))
    ok = best_q >= 14 and ksum >= 24 and ksum - 10 == best_q and avg == formula
    return _result(claim, P, ok, f"{best_e[0]}-{best_e[1]}",
                   f"quasi-incident={best_q} face-sum={ksum} average={avg}")


# -- mixed -------------------------------------------------------------------

def _neighbour_counts(P):
    return [face_neighbours(P, f) for f in range(P.n_faces)]


def verify_neighbours(P: CombinatorialPolytope, part: int) -> ClaimResult:
    """The three face-neighbour statements for finite-volume polyhedra.

    1. V_F + V_inf > 15 and V_inf >= 1: a face with >= 6 neighbours.
    2. V_F + V_inf > 14, V_inf >= 3, no face with >= 7: five faces with >= 6.
    3. V_inf >= 6 and a face with <= 5 neighbours: a face with >= 7.
    """
    claim = f"neighbours-{part}"
    if not classify(P).realizable:
        return _na(claim, P, "needs a realizable polyhedron")
    prof = profile(P)
    vi, vf = prof.V_inf, prof.V_F
    counts = _neighbour_counts(P)
    if part == 1:
        if not (vf + vi > 15 and vi >= 1):
            return _na(claim, P, "needs V_F + V_inf > 15 and V_inf >= 1")
        hits = [f for f, c in enumerate(counts) if c >= 6]
        return _result(claim, P, bool(hits), f"f{hits[0]}" if hits else "",
                       f"max neighbours={max(counts)}")
    if part == 2:
        if not (vf + vi > 14 and vi >= 3) or max(counts) >= 7:
            return _na(claim, P, "needs V_F + V_inf > 14, V_inf >= 3, no face with 7 neighbours")
        hits = [f for f, c in enumerate(counts) if c >= 6]
        return _result(claim, P, len(hits) >= 5, ",".join(f"f{f}" for f in hits[:5]),
                       f"faces with >= 6 neighbours={len(hits)}")
    if part == 3:
        if not (vi >= 6 and min(counts) <= 5):
            return _na(claim, P, "needs V_inf >= 6 and a face with <= 5 neighbours")
        hits = [f for f, c in enumerate(counts) if c >= 7]
        return _result(claim, P, bool(hits), f"f{hits[0]}" if hits else "",
                       f"max neighbours={max(counts)}")
    raise ValueError(f"part must be 1, 2 or 3, got {part}")


def _n6_witness(P: CombinatorialPolytope) -> Optional[int]:
    for f in sorted(n6_faces(P)):
        if not ideal_triangle(P, f):
            return f
    return None


def verify_n6(P: CombinatorialPolytope) -> ClaimResult:
    """V_inf + V_F > 14 (with an ideal vertex): N6 has a face that is not an ideal triangle."""
    claim = "n6-non-ideal-triangle"
    if not classify(P).realizable:
        return _na(claim, P, "needs a realizable polyhedron")
    prof = profile(P)
    if not (prof.V_inf + prof.V_F > 14 and prof.V_inf >= 1):
        return _na(claim, P, "needs V_inf + V_F > 14 and V_inf >= 1")
    f = _n6_witness(P)
    return _result(claim, P, f is not None, f"f{f}" if f is not None else "")


def verify_n6_chain(chain: DoublingChain) -> list[ClaimResult]:
    """Every stage of a doubling chain keeps a non-ideal-triangle face in N6."""
    claim = "n6-chain"
    first = chain.polytopes[0]
    prof = profile(first)
    if not (prof.V_inf + prof.V_F > 14 and prof.V_inf >= 1):
        return [_na(claim, first, "needs V_inf + V_F > 14 and V_inf >= 1 at the start")]
    out = []
    for i, P in enumerate(chain.polytopes, start=1):
        f = _n6_witness(P)
        out.append(ClaimResult(claim, f"{P.name} (stage {i})", HOLDS if f is not None else FAILS,
                               f"f{f}" if f is not None else ""))
    return out


# -- identities and surgery --------------------------------------------------

def verify_identities(P: CombinatorialPolytope) -> ClaimResult:
    """Euler, face-count and averaging identities as exact equalities."""
    claim = "exact-identities"
    real = classify(P)
    if not real.realizable:
        return _na(claim, P, "needs a realizable polyhedron")
    prof = profile(P)
    V, E, F, p = prof.V, prof.E, prof.F, prof.p
    checks = {
        "euler": V - E + F == 2,
        "sum p_k": sum(p.values()) == F,
        "sum k p_k": sum(k * n for k, n in p.items()) == 2 * E,
        "edges": 3 * prof.V_F + 4 * prof.V_inf == 2 * E,
        "faces": 2 * F == prof.V_F + 2 * prof.V_inf + 4,
        "neighbour average": avg_face_neighbours(P) == mean_face_neighbours(P),
    }
    if real.kind is RealizabilityKind.IDEAL:
        checks["p3"] = p.get(3, 0) == 8 + sum((k - 4) * n for k, n in p.items() if k >= 5)
        checks["quasi-adjacent average"] = (
            avg_quasi_adjacent(P) == avg_quasi_adjacent_formula(prof))
    if real.kind is RealizabilityKind.COMPACT:
        checks["p3=p4=0"] = p.get(3, 0) == 0 and p.get(4, 0) == 0
        checks["p5"] = p.get(5, 0) == 12 + sum((k - 6) * n for k, n in p.items() if k >= 7)
        checks["quasi-incident average"] = (
            avg_quasi_incident(P) == avg_quasi_incident_formula(prof))
        checks["quasi-incident per edge"] = all(
            quasi_incident_vertices(P, e) == edge_face_degree_sum(P, e) - 10 for e in P.edges)
    checks["at least 6 faces"] = F >= 6
    checks["every face has >= 5 neighbours"] = min(_neighbour_counts(P)) >= 5
    bad = [k for k, ok in checks.items() if not ok]
    return _result(claim, P, not bad, detail=("failed: " + ", ".join(bad)) if bad else
                   f"{len(checks)} identities")


def verify_doubling(P: CombinatorialPolytope, faces: Optional[Iterable[int]] = None,
                    check_realizable: bool = True) -> ClaimResult:
    """Vertex-count contracts and realizability of doubles along the given faces."""
    claim = "doubling-contract"
    if not classify(P).realizable:
        return _na(claim, P, "needs a realizable polyhedron")
    prof = profile(P)
    faces = range(P.n_faces) if faces is None else list(faces)
    for f in faces:
        ki, kf = face_vertex_kinds(P, f)
        D = double_along_face(P, f)
        pd = profile(D)
        if pd.V_inf != 2 * prof.V_inf - ki or pd.V_F != 2 * prof.V_F - 2 * kf:
            return _result(claim, P, False, f"f{f}", "vertex counts off")
        if pd.F != 2 * prof.F - 2 - len(P.face_edge_neighbours[f]):
            return _result(claim, P, False, f"f{f}", "face count off")
        if check_realizable and not classify(D).realizable:
            return _result(claim, P, False, f"f{f}", "double not realizable")
    return _result(claim, P, True, detail=f"{len(faces)} faces doubled")


def verify_bound_soundness(catalog: Sequence[CatalogEntry]) -> list[ClaimResult]:
    """Known volumes lie inside every applicable bound."""
    out = []
    for entry in catalog:
        if entry.known_volume is None:
            continue
        P = entry.polytope
        vol = entry.known_volume
        rep = bound_report(P)
        bad = []
        for e in rep.applicable():
            slack = e.value.abs_err + vol.abs_err
            if e.bound.side == "upper" and vol.value > e.value.value + slack:
                bad.append(e.bound.label)
            if e.bound.side == "lower" and vol.value < e.value.value - slack:
                bad.append(e.bound.label)
        detail = (f"volume={vol.value:.9g} in [{rep.best_lower.value.value:.9g}, "
                  f"{rep.best_upper.value.value:.9g}]")
        out.append(ClaimResult("bound-soundness", P.name, FAILS if bad else HOLDS,
                               ",".join(bad) or rep.best_upper.bound.label, detail))
    return out


# -- suites ------------------------------------------------------------------

SUITES = ("ideal", "compact", "mixed", "all")


def _chains(entries: Sequence[CatalogEntry], depth: int = 3) -> list[DoublingChain]:
    out = []
    for e in entries:
        prof = profile(e.polytope)
        if prof.V_inf >= 1 and prof.V_inf + prof.V_F > 14 and e.family in ("mixed", "antiprism"):
            out.append(double_chain(e.polytope, depth, "n6-non-ideal-triangle"))
    return out


def verify_suite(suite: str = "all",
                 catalog: Optional[Sequence[CatalogEntry]] = None) -> list[ClaimResult]:
    """Run every claim relevant to ``suite`` over the catalog, in catalog order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    catalog = default_catalog() if catalog is None else catalog
    want = {
        "ideal": {RealizabilityKind.IDEAL},
        "compact": {RealizabilityKind.COMPACT},
        "mixed": {RealizabilityKind.MIXED},
        "all": {RealizabilityKind.IDEAL, RealizabilityKind.COMPACT, RealizabilityKind.MIXED},
    }[suite]
    entries = [e for e in catalog if classify(e.polytope).kind in want]
    out: list[ClaimResult] = []
    for e in entries:
        P = e.polytope
        kind = classify(P).kind
        out.append(verify_identities(P))
        if kind is RealizabilityKind.IDEAL:
            out.append(verify_quasi_adjacent(P))
            out.append(verify_triangle_free(P))
        if kind is RealizabilityKind.COMPACT:
            out.append(verify_fat_edge(P))
        for part in (1, 2, 3):
            out.append(verify_neighbours(P, part))
        out.append(verify_n6(P))
    for chain in _chains(entries):
        out.extend(verify_n6_chain(chain))
    out.extend(verify_bound_soundness(entries))
    return out
