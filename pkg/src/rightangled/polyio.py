"""Plain-text polytope files, canonical form and CSV bound reports.

File layout::

    # comment
    polytope octahedron
    vertices 6
    face 0 1 2
    ...

Vertex ids are 0-based and implicit; ``vertices`` restates their count and
is checked against the faces.
"""
from __future__ import annotations

import csv
import io
import os
from pathlib import Path
from typing import Iterable, Optional, Sequence, TextIO, Union

from .andreev import classify
from .bounds import BoundId, bound_report
from .catalog import CatalogEntry
from .polytope import CombinatorialPolytope, PolytopeError, profile

SUFFIX = ".poly"


class ParseError(PolytopeError):
    def __init__(self, message: str, line: Optional[int] = None, source: str = "<input>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def parse(text: str, source: str = "<input>", first_line: int = 1) -> CombinatorialPolytope:
    """Read one polytope.  Structural validity is not checked here."""
    name = None
    n_vertices = None
    faces: list[tuple[int, ...]] = []
    last = first_line
    for lineno, raw in enumerate(text.splitlines(), start=first_line):
        last = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "polytope":
            if name is not None:
                raise ParseError("second 'polytope' header", lineno, source)
            if faces or n_vertices is not None:
                raise ParseError("'polytope' header must come first", lineno, source)
            name = rest
        elif key == "vertices":
            if name is None:
                raise ParseError("'vertices' before 'polytope' header", lineno, source)
            if n_vertices is not None:
                raise ParseError("second 'vertices' line", lineno, source)
            try:
                n_vertices = int(rest)
            except ValueError:
                raise ParseError(f"vertex count {rest!r} is not an integer", lineno, source) from None
            if n_vertices < 0:
                raise ParseError("negative vertex count", lineno, source)
        elif key == "face":
            if n_vertices is None:
                raise ParseError("'face' before 'vertices' line", lineno, source)
            try:
                ids = tuple(int(t) for t in rest.split())
            except ValueError:
                raise ParseError(f"face ids must be integers: {rest!r}", lineno, source) from None
            if len(ids) < 3:
                raise ParseError("a face needs at least 3 vertices", lineno, source)
            bad = [v for v in ids if not 0 <= v < n_vertices]
            if bad:
                raise ParseError(f"vertex id {bad[0]} outside 0..{n_vertices - 1}", lineno, source)
            faces.append(ids)
        else:
            raise ParseError(f"unknown keyword {key!r}", lineno, source)
    if name is None:
        raise ParseError("missing 'polytope' header", None, source)
    if n_vertices is None:
        raise ParseError("missing 'vertices' line", None, source)
    if not faces:
        raise ParseError("no faces", None, source)
    used = {v for f in faces for v in f}
    if len(used) != n_vertices:
        missing = sorted(set(range(n_vertices)) - used)
        raise ParseError(f"vertices {missing[:5]} appear in no face", last, source)
    return CombinatorialPolytope(faces, name=name)


def parse_many(text: str, source: str = "<input>") -> list[CombinatorialPolytope]:
    """Read a stream of polytopes, each starting at its own header line."""
    chunks: list[tuple[int, list[str]]] = []
    pending: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.split("#", 1)[0].split()[:1] == ["polytope"] or not chunks:
            if chunks or raw.split("#", 1)[0].strip():
                chunks.append((lineno - len(pending), pending + [raw]))
                pending = []
            else:
                pending.append(raw)
                continue
        else:
            chunks[-1][1].append(raw)
    if not chunks:
        raise ParseError("missing 'polytope' header", None, source)
    return [parse("\n".join(lines), source, start) for start, lines in chunks]


def canonical_face(face: Sequence[int]) -> tuple[int, ...]:
    """Start at the minimal vertex and head towards its smaller neighbour."""
    k = len(face)
    i = min(range(k), key=lambda j: face[j])
    fwd = tuple(face[(i + j) % k] for j in range(k))
    back = tuple(face[(i - j) % k] for j in range(k))
    return fwd if fwd[1] < back[1] else back


def canonicalize(P: CombinatorialPolytope) -> CombinatorialPolytope:
    return CombinatorialPolytope(sorted(canonical_face(f) for f in P.faces), name=P.name)


def serialize(P: CombinatorialPolytope) -> str:
    Q = canonicalize(P)
    lines = [f"polytope {Q.name}", f"vertices {Q.n_vertices}"]
    lines += ["face " + " ".join(map(str, f)) for f in Q.faces]
    return "\n".join(lines) + "\n"


def read(path: Union[str, os.PathLike, TextIO]) -> CombinatorialPolytope:
    if hasattr(path, "read"):
        return parse(path.read(), getattr(path, "name", "<stdin>"))
    p = Path(path)
    return parse(p.read_text(encoding="utf-8"), str(p))


def read_many(path: Union[str, os.PathLike, TextIO]) -> list[CombinatorialPolytope]:
    if hasattr(path, "read"):
        return parse_many(path.read(), getattr(path, "name", "<stdin>"))
    p = Path(path)
    return parse_many(p.read_text(encoding="utf-8"), str(p))


def write(P: CombinatorialPolytope, path: Union[str, os.PathLike]) -> None:
    Path(path).write_text(serialize(P), encoding="utf-8")


def load_catalog_dir(path: Union[str, os.PathLike]) -> list[CatalogEntry]:
    """Every ``*.poly`` file in a directory, sorted by file name."""
    d = Path(path)
    if not d.is_dir():
        raise FileNotFoundError(f"catalog directory {d} does not exist")
    return [CatalogEntry(P, "user")
            for f in sorted(d.glob("*" + SUFFIX)) for P in read_many(f)]


# -- reports -----------------------------------------------------------------

def fmt(x: Optional[float]) -> str:
    return "" if x is None else format(x, ".9g")


def report_header() -> list[str]:
    cols = ["name", "class", "V", "V_inf", "V_F", "E", "F", "p_k"]
    cols += [b.label for b in BoundId]
    cols += ["best_upper_id", "best_upper", "known_volume", "slack"]
    return cols


def report_row(entry: CatalogEntry) -> list[str]:
    P = entry.polytope
    prof = profile(P)
    kind = classify(P).kind
    row = [P.name, kind.value, str(prof.V), str(prof.V_inf), str(prof.V_F),
           str(prof.E), str(prof.F), prof.p_summary()]
    if not classify(P).realizable:
        row += [""] * (len(BoundId) + 4)
        return row
    rep = bound_report(P)
    row += [fmt(e.value.value) if e.applicable else "" for e in rep.entries]
    best = rep.best_upper
    known = entry.known_volume
    row += [best.bound.label, fmt(best.value.value), fmt(known.value if known else None),
            fmt(best.value.value - known.value if known else None)]
    return row


def write_report(entries: Iterable[CatalogEntry], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(report_header())
    for e in entries:
        w.writerow(report_row(e))


def report_text(entries: Iterable[CatalogEntry]) -> str:
    buf = io.StringIO()
    write_report(entries, buf)
    return buf.getvalue()
