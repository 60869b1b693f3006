"""Combinatorial 3-polytopes given by face cycles, and their counting invariants.

A polytope is a tuple of faces, each a cyclic tuple of vertex ids.  Vertex ids
run over ``0 .. V-1`` with ``V = max id + 1``.  Everything here is exact:
counts are integers and averages are :class:`fractions.Fraction`.
"""
from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

Edge = tuple[int, int]


class PolytopeError(ValueError):
    """Raised when an operation receives an invalid polytope or id."""


def edge_key(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


class VertexKind(enum.Enum):
    FINITE = 3
    IDEAL = 4
    OVERFULL = 5

    @classmethod
    def from_valence(cls, valence: int) -> "VertexKind":
        if valence <= 3:
            return cls.FINITE
        if valence == 4:
            return cls.IDEAL
        return cls.OVERFULL


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class ValidationResult:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


@dataclass(frozen=True)
class CombinatorialPolytope:
    """Combinatorial type of a 3-polytope.

    Faces keep the orientation they were given; nothing here requires the
    orientations to be globally consistent.
    """

    faces: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        faces = tuple(tuple(int(v) for v in f) for f in self.faces)
        if not faces:
            raise PolytopeError("polytope needs at least one face")
        for f in faces:
            if not f:
                raise PolytopeError("empty face")
            if min(f) < 0:
                raise PolytopeError(f"negative vertex id in face {f}")
        object.__setattr__(self, "faces", faces)

    def __repr__(self):
        return f"CombinatorialPolytope({self.name!r}, V={self.n_vertices}, F={self.n_faces})"

    @cached_property
    def n_vertices(self) -> int:
        return max(max(f) for f in self.faces) + 1

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edges(self) -> dict[Edge, tuple[int, ...]]:
        """Map from each edge (sorted vertex pair) to the faces containing it."""
        table: dict[Edge, list[int]] = defaultdict(list)
        for i, f in enumerate(self.faces):
            k = len(f)
            for j in range(k):
                table[edge_key(f[j], f[(j + 1) % k])].append(i)
        return {e: tuple(fs) for e, fs in sorted(table.items())}

    @cached_property
    def vertex_faces(self) -> tuple[tuple[int, ...], ...]:
        table: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for i, f in enumerate(self.faces):
            for v in set(f):
                table[v].append(i)
        return tuple(tuple(fs) for fs in table)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n_vertices)]
        for a, b in self.edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def face_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(f) for f in self.faces)

    @cached_property
    def face_edge_neighbours(self) -> tuple[dict[int, Edge], ...]:
        """For each face, the faces sharing an edge with it and the shared edge."""
        table: list[dict[int, Edge]] = [{} for _ in self.faces]
        for e, fs in self.edges.items():
            if len(fs) == 2 and fs[0] != fs[1]:
                a, b = fs
                table[a].setdefault(b, e)
                table[b].setdefault(a, e)
        return tuple(table)

    def valence(self, v: int) -> int:
        return len(self.vertex_faces[v])

    def kind(self, v: int) -> VertexKind:
        return VertexKind.from_valence(self.valence(v))

    def face_degree(self, f: int) -> int:
        return len(self.faces[f])

    @cached_property
    def validation(self) -> ValidationResult:
        return _validate(self)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n_vertices:
            raise PolytopeError(f"unknown vertex id {v}")

    def check_face(self, f: int) -> None:
        if not 0 <= f < self.n_faces:
            raise PolytopeError(f"unknown face id {f}")

    def check_edge(self, e: Edge) -> Edge:
        e = edge_key(*e)
        if e not in self.edges:
            raise PolytopeError(f"{e} is not an edge")
        return e

    def require_valid(self) -> None:
        if not self.validation.ok:
            raise PolytopeError(
                "unvalidated input: " + "; ".join(map(str, self.validation.violations)))


def _connected(n: int, nbrs) -> bool:
    if n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in nbrs(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def vertex_link(P: CombinatorialPolytope, v: int) -> Optional[list[int]]:
    """Neighbours of ``v`` in rotation order, or None if the link is not one cycle."""
    arcs: dict[int, list[int]] = defaultdict(list)
    for i in P.vertex_faces[v]:
        f = P.faces[i]
        j = f.index(v)
        a, b = f[j - 1], f[(j + 1) % len(f)]
        arcs[a].append(b)
        arcs[b].append(a)
    if not arcs or any(len(x) != 2 for x in arcs.values()):
        return None
    start = min(arcs)
    cycle = [start]
    prev, cur = None, start
    while True:
        a, b = arcs[cur]
        nxt = b if a == prev else a
        if prev is not None and a == prev and b == prev:
            return None
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
        if len(cycle) > len(arcs):
            return None
    return cycle if len(cycle) == len(arcs) else None


def _validate(P: CombinatorialPolytope) -> ValidationResult:
    out: list[Violation] = []
    for i, f in enumerate(P.faces):
        if len(f) < 3:
            out.append(Violation("face too small", f"face {i} has {len(f)} vertices"))
        if len(set(f)) != len(f):
            out.append(Violation("repeated vertex", f"face {i} repeats a vertex: {f}"))
    for e, fs in P.edges.items():
        if len(fs) != 2 or fs[0] == fs[1]:
            out.append(Violation("edge not in exactly 2 faces",
                                 f"edge {e} lies in faces {list(fs)}"))
    for v in range(P.n_vertices):
        if not P.vertex_faces[v]:
            out.append(Violation("orphan vertex", f"vertex {v} lies in no face"))
    if out:
        return ValidationResult(tuple(out))

    for v in range(P.n_vertices):
        if P.valence(v) < 3:
            out.append(Violation("vertex valence below 3",
                                 f"vertex {v} lies in {P.valence(v)} faces"))
        elif vertex_link(P, v) is None:
            out.append(Violation("vertex link not a single cycle",
                                 f"faces around vertex {v} do not close up"))
    V, E, F = P.n_vertices, P.n_edges, P.n_faces
    if V - E + F != 2:
        out.append(Violation("Euler characteristic", f"V - E + F = {V - E + F}, expected 2"))
    if not _connected(F, lambda i: P.face_edge_neighbours[i]):
        out.append(Violation("disconnected face graph", "face adjacency graph is disconnected"))
    if not _connected(V, lambda v: P.adjacency[v]):
        out.append(Violation("disconnected skeleton", "vertex 1-skeleton is disconnected"))
    return ValidationResult(tuple(out))


def validate(P: CombinatorialPolytope) -> ValidationResult:
    return P.validation


@dataclass(frozen=True)
class IncidenceProfile:
    V: int
    E: int
    F: int
    p: dict[int, int]
    valence: tuple[int, ...]
    V_F: int
    V_inf: int
    V_over: int = 0

    @property
    def is_ideal(self) -> bool:
        return self.V_inf == self.V and self.V > 0

    @property
    def is_compact(self) -> bool:
        return self.V_F == self.V and self.V > 0

    @property
    def max_face_degree(self) -> int:
        return max(self.p)

    def p_summary(self) -> str:
        return ";".join(f"{k}:{n}" for k, n in sorted(self.p.items()))


def profile(P: CombinatorialPolytope) -> IncidenceProfile:
    P.require_valid()
    val = tuple(P.valence(v) for v in range(P.n_vertices))
    counts = Counter(val)
    p = dict(sorted(Counter(len(f) for f in P.faces).items()))
    return IncidenceProfile(
        V=P.n_vertices, E=P.n_edges, F=P.n_faces, p=p, valence=val,
        V_F=counts.get(3, 0), V_inf=counts.get(4, 0),
        V_over=sum(n for k, n in counts.items() if k >= 5),
    )


# -- vertices ----------------------------------------------------------------

def cofacial_vertices(P: CombinatorialPolytope, v: int) -> set[int]:
    out: set[int] = set()
    for i in P.vertex_faces[v]:
        out |= P.face_sets[i]
    out.discard(v)
    return out


def quasi_adjacent(P: CombinatorialPolytope, v: int) -> set[int]:
    """Vertices sharing a face with ``v`` but not an edge."""
    P.require_valid()
    P.check_vertex(v)
    return cofacial_vertices(P, v) - P.adjacency[v]


def quasi_adjacent_count(P: CombinatorialPolytope, v: int) -> int:
    return len(quasi_adjacent(P, v))


def _require_all_ideal(P: CombinatorialPolytope, what: str) -> IncidenceProfile:
    prof = profile(P)
    if not prof.is_ideal:
        raise PolytopeError(f"{what}: formula requires all-ideal polytope")
    return prof


def avg_quasi_adjacent(P: CombinatorialPolytope) -> Fraction:
    """Mean number of quasi-adjacent vertices, by direct summation."""
    prof = _require_all_ideal(P, "avg_quasi_adjacent")
    total = sum(quasi_adjacent_count(P, v) for v in range(prof.V))
    return Fraction(total, prof.V)


def avg_quasi_adjacent_formula(prof: IncidenceProfile) -> Fraction:
    """Closed form 4 - 24/V + (1/V) sum_{k>=5} (k^2 - 7k + 12) p_k."""
    extra = sum((k * k - 7 * k + 12) * n for k, n in prof.p.items() if k >= 5)
    return 4 - Fraction(24, prof.V) + Fraction(extra, prof.V)


# -- edges -------------------------------------------------------------------

def faces_around_edge(P: CombinatorialPolytope, e: Edge) -> tuple[int, int, int, int]:
    """The four faces around an edge with trivalent endpoints.

    Returns ``(f1, f2, f3, f4)`` where ``f1`` and ``f3`` contain the edge,
    ``f2`` is the third face at the smaller endpoint and ``f4`` the third face
    at the larger one.
    """
    P.require_valid()
    e = P.check_edge(e)
    u, w = e
    if P.valence(u) != 3 or P.valence(w) != 3:
        raise PolytopeError("edge quasi-incidence defined for compact polytopes "
                            f"(edge {e} has an endpoint that is not trivalent)")
    f1, f3 = P.edges[e]
    (f2,) = set(P.vertex_faces[u]) - {f1, f3}
    (f4,) = set(P.vertex_faces[w]) - {f1, f3}
    return f1, f2, f3, f4


def edge_face_degree_sum(P: CombinatorialPolytope, e: Edge) -> int:
    return sum(P.face_degree(f) for f in faces_around_edge(P, e))


def quasi_incident_to_edge(P: CombinatorialPolytope, e: Edge) -> set[int]:
    faces_around_edge(P, e)  # precondition check
    u, w = edge_key(*e)
    return (cofacial_vertices(P, u) | cofacial_vertices(P, w)) - {u, w}


def quasi_incident_vertices(P: CombinatorialPolytope, e: Edge) -> int:
    """Number of vertices quasi-incident to edge ``e`` (direct count)."""
    return len(quasi_incident_to_edge(P, e))


def avg_quasi_incident(P: CombinatorialPolytope) -> Fraction:
    P.require_valid()
    total = sum(quasi_incident_vertices(P, e) for e in P.edges)
    return Fraction(total, P.n_edges)


def avg_quasi_incident_formula(prof: IncidenceProfile) -> Fraction:
    """Closed form 14 - 120/E + (2/E) sum_{k>=7} (k^2 - 11k + 30) p_k.

    Each k-gon is one of the four faces around exactly 2k edges (k edges on
    it, k edges leaving its vertices), so the per-edge sums total
    2 sum k^2 p_k; substituting 3V = 2E and Euler gives the form above.
    """
    extra = sum((k * k - 11 * k + 30) * n for k, n in prof.p.items() if k >= 7)
    return 14 - Fraction(120, prof.E) + Fraction(2 * extra, prof.E)


# -- faces -------------------------------------------------------------------

def neighbouring_faces(P: CombinatorialPolytope, f: int) -> set[int]:
    """Faces other than ``f`` sharing at least one vertex with it."""
    P.check_face(f)
    out: set[int] = set()
    for v in P.faces[f]:
        out.update(P.vertex_faces[v])
    out.discard(f)
    return out


def face_neighbours(P: CombinatorialPolytope, f: int) -> int:
    return len(neighbouring_faces(P, f))


def mean_face_neighbours(P: CombinatorialPolytope) -> Fraction:
    """Average of :func:`face_neighbours` over all faces, counted directly."""
    P.require_valid()
    return Fraction(sum(face_neighbours(P, f) for f in range(P.n_faces)), P.n_faces)


def avg_face_neighbours(P: CombinatorialPolytope) -> Fraction:
    """(8 V_inf + 3 V_F) / (V_inf + V_F/2 + 2)."""
    prof = profile(P)
    if prof.V_over:
        raise PolytopeError("average neighbour formula needs vertices in 3 or 4 faces")
    return Fraction(8 * prof.V_inf + 3 * prof.V_F) / (prof.V_inf + Fraction(prof.V_F, 2) + 2)


def face_reach(P: CombinatorialPolytope, f: int) -> set[int]:
    """Vertices incident or quasi-incident to face ``f``.

    A vertex is quasi-incident to ``f`` when it lies on a face sharing an
    edge with ``f``.
    """
    out = set(P.faces[f])
    for g in P.face_edge_neighbours[f]:
        out |= P.face_sets[g]
    return out


def triangle_free_vertex(P: CombinatorialPolytope) -> Optional[int]:
    """Smallest vertex with no incident or quasi-incident triangular face."""
    P.require_valid()
    touched: set[int] = set()
    for i, face in enumerate(P.faces):
        if len(face) == 3:
            touched |= face_reach(P, i)
    for v in range(P.n_vertices):
        if v not in touched:
            return v
    return None


def ideal_triangle(P: CombinatorialPolytope, f: int) -> bool:
    return P.face_degree(f) == 3 and all(P.valence(v) == 4 for v in P.faces[f])


def vertices_of(faces: Iterable[Iterable[int]]) -> set[int]:
    return {v for f in faces for v in f}
