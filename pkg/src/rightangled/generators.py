"""Face lists for the polytope families used throughout the package."""
from __future__ import annotations

from .polytope import CombinatorialPolytope, PolytopeError, vertex_link


def antiprism(n: int) -> CombinatorialPolytope:
    """A(n): two n-gonal bases and 2n lateral triangles on 2n vertices."""
    if n < 3:
        raise PolytopeError(f"antiprism needs n >= 3, got {n}")
    top = tuple(range(n))
    bottom = tuple(n + i for i in reversed(range(n)))
    faces = [top, bottom]
    for i in range(n):
        j = (i + 1) % n
        faces.append((j, i, n + i))
        faces.append((j, n + i, n + j))
    return CombinatorialPolytope(faces, name=f"A({n})")


def loebell(n: int) -> CombinatorialPolytope:
    """L(n): two n-gonal bases and two rings of n pentagons on 4n vertices."""
    if n < 5:
        raise PolytopeError(f"Loebell polytope needs n >= 5, got {n}")
    t = lambda i: i % n
    a = lambda i: n + i % n
    b = lambda i: 2 * n + i % n
    c = lambda i: 3 * n + i % n
    faces = [tuple(t(i) for i in range(n)), tuple(c(i) for i in reversed(range(n)))]
    for i in range(n):
        faces.append((t(i + 1), t(i), a(i), b(i), a(i + 1)))
        faces.append((b(i), a(i + 1), b(i + 1), c(i + 1), c(i))[::-1])
    return CombinatorialPolytope(faces, name=f"L({n})")


def prism(n: int) -> CombinatorialPolytope:
    if n < 3:
        raise PolytopeError(f"prism needs n >= 3, got {n}")
    faces = [tuple(range(n)), tuple(n + i for i in reversed(range(n)))]
    for i in range(n):
        j = (i + 1) % n
        faces.append((j, i, n + i, n + j))
    name = {3: "triangular prism", 4: "cube"}.get(n, f"prism({n})")
    return CombinatorialPolytope(faces, name=name)


def tetrahedron() -> CombinatorialPolytope:
    return CombinatorialPolytope([(0, 1, 2), (0, 3, 1), (1, 3, 2), (0, 2, 3)],
                                 name="tetrahedron")


def cube() -> CombinatorialPolytope:
    return prism(4)


def pyramid(n: int) -> CombinatorialPolytope:
    faces = [tuple(reversed(range(n)))]
    faces += [(i, (i + 1) % n, n) for i in range(n)]
    return CombinatorialPolytope(faces, name=f"pyramid({n})")


def icosahedron() -> CombinatorialPolytope:
    """A(5) with a pyramid cap on each base."""
    base = antiprism(5)
    faces = [f for f in base.faces if len(f) == 3]
    for i in range(5):
        faces.append((i, (i + 1) % 5, 10))
        faces.append((5 + (i + 1) % 5, 5 + i, 11))
    return CombinatorialPolytope(faces, name="icosahedron")


def truncate(P: CombinatorialPolytope, name: str | None = None) -> CombinatorialPolytope:
    """Cut off every vertex: k-gons become 2k-gons and each vertex a new face."""
    P.require_valid()
    ids: dict[tuple[int, int], int] = {}

    def corner(v, u):
        return ids.setdefault((v, u), len(ids))

    faces = []
    for f in P.faces:
        k = len(f)
        cyc = []
        for j in range(k):
            cyc.append(corner(f[j], f[j - 1]))
            cyc.append(corner(f[j], f[(j + 1) % k]))
        faces.append(tuple(cyc))
    for v in range(P.n_vertices):
        faces.append(tuple(corner(v, u) for u in vertex_link(P, v)))
    return CombinatorialPolytope(faces, name=name or f"truncated {P.name}")


def fullerene_c60() -> CombinatorialPolytope:
    return truncate(icosahedron(), name="C60")


def _replace_in_face(face, v, before, new, after):
    """Replace ``v`` in ``face`` by a path, oriented to match the face."""
    k = len(face)
    j = face.index(v)
    prev, nxt = face[j - 1], face[(j + 1) % k]
    if prev == before and nxt == after:
        path = new
    elif prev == after and nxt == before:
        path = new[::-1]
    else:
        raise PolytopeError(f"face {face} does not run {before}-{v}-{after}")
    return face[:j] + tuple(path) + face[j + 1:]


def split_vertex(P: CombinatorialPolytope, v: int, parity: int = 0,
                 name: str | None = None) -> CombinatorialPolytope:
    """Replace a vertex lying in four faces by an edge with two trivalent ends.

    With the link of ``v`` written ``u0 u1 u2 u3``, the new edge is shared by
    the faces spanning ``(u_s, u_s+1)`` and ``(u_s+2, u_s+3)`` where
    ``s = parity``.  The new endpoint gets id ``V``.
    """
    P.require_valid()
    if P.valence(v) != 4:
        raise PolytopeError(f"vertex {v} is not in exactly four faces")
    u = vertex_link(P, v)
    s = parity % 2
    u = u[s:] + u[:s]
    w = P.n_vertices

    def face_between(a, b):
        for i in P.vertex_faces[v]:
            if {a, b} <= P.face_sets[i]:
                f = P.faces[i]
                j = f.index(v)
                if {f[j - 1], f[(j + 1) % len(f)]} == {a, b}:
                    return i
        raise PolytopeError("inconsistent vertex link")

    f0 = face_between(u[0], u[1])
    f1 = face_between(u[1], u[2])
    f2 = face_between(u[2], u[3])
    faces = list(P.faces)
    # v keeps u3, u0; w takes u1, u2
    faces[f0] = _replace_in_face(P.faces[f0], v, u[0], (v, w), u[1])
    faces[f1] = tuple(w if x == v else x for x in P.faces[f1])
    faces[f2] = _replace_in_face(P.faces[f2], v, u[2], (w, v), u[3])
    return CombinatorialPolytope(faces, name=name or f"{P.name} split {v}")


def contract_edge(P: CombinatorialPolytope, e: tuple[int, int],
                  name: str | None = None) -> CombinatorialPolytope:
    """Collapse an edge with two trivalent ends into one vertex in four faces.

    The inverse of :func:`split_vertex`.  The larger endpoint disappears and
    vertex ids above it shift down by one.
    """
    P.require_valid()
    u, w = P.check_edge(e)
    if P.valence(u) != 3 or P.valence(w) != 3:
        raise PolytopeError(f"edge {e} needs two trivalent endpoints")
    faces = []
    for f in P.faces:
        if u in f and w in f:
            f = tuple(x for x in f if x != w)
        else:
            f = tuple(u if x == w else x for x in f)
        faces.append(tuple(x - 1 if x > w else x for x in f))
    return CombinatorialPolytope(faces, name=name or f"{P.name} contract {u}-{w}")
