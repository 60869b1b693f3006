"""Command-line entry point: ``rightangled <command> ...``.

Exit codes: 0 success, 1 invalid input or a failed claim, 2 usage error.
Polytope inputs may be a path or ``-`` for stdin and may hold several
polytopes one after another; each is processed in order.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import polyio
from .andreev import classify
from .bounds import bound_report
from .catalog import default_catalog
from .generators import antiprism, loebell
from .harness import FAILS, SUITES, verify_suite
from .polytope import CombinatorialPolytope, PolytopeError, profile
from .surgery import SELECTORS, double_chain, octahedron_chain
from .volumes import family_volume

FAMILIES = ("antiprism", "loebell", "octa-double-chain")


class CliError(Exception):
    """Reported on stderr with exit code 1."""


class UsageError(CliError):
    """A parameter outside its range; exit code 2."""


def _load(path: str) -> list[CombinatorialPolytope]:
    try:
        if path == "-":
            return polyio.read_many(sys.stdin)
        return polyio.read_many(path)
    except OSError as e:
        raise CliError(f"{path}: {e.strerror or e}") from None
    except PolytopeError as e:
        raise CliError(str(e)) from None


def _out_path(args, name: str) -> Path:
    p = Path(name)
    if args.output_dir and not p.is_absolute():
        p = Path(args.output_dir) / p
    return p


def _emit(args, text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    p = _out_path(args, out)
    try:
        p.write_text(text, encoding="utf-8")
    except OSError as e:
        raise CliError(f"{p}: {e.strerror or e}") from None


def _check_valid(P: CombinatorialPolytope) -> None:
    if not P.validation.ok:
        raise CliError(f"{P.name}: invalid polytope: "
                       + "; ".join(map(str, P.validation.violations)))


# -- commands ----------------------------------------------------------------

def cmd_validate(args) -> int:
    status = 0
    for P in _load(args.file):
        res = P.validation
        if res.ok:
            print(f"{P.name}: valid")
        else:
            status = 1
            print(f"{P.name}: invalid")
            for v in res.violations:
                print(f"  {v}")
    return status


def cmd_classify(args) -> int:
    for P in _load(args.file):
        _check_valid(P)
        r = classify(P)
        line = f"{P.name}: {r.kind.value}"
        if r.witness is not None:
            line += f" ({r.witness})"
        print(line)
    return 0


def cmd_stats(args) -> int:
    for P in _load(args.file):
        _check_valid(P)
        prof = profile(P)
        print(f"name={P.name}")
        print(f"class={classify(P).kind.value}")
        for key in ("V", "V_inf", "V_F", "E", "F"):
            print(f"{key}={getattr(prof, key)}")
        print(f"p_k={prof.p_summary()}")
    return 0


def cmd_bounds(args) -> int:
    for P in _load(args.file):
        _check_valid(P)
        r = classify(P)
        if not r.realizable:
            raise CliError(f"{P.name}: not realizable ({r.witness})")
        rep = bound_report(P)
        print(f"{P.name}: {rep.kind.value}")
        for e in rep.entries:
            if e.applicable:
                extra = f"  [{e.detail}]" if e.detail else ""
                print(f"  {e.bound.label} {e.bound.side} {polyio.fmt(e.value.value)}"
                      f" +-{e.value.abs_err:.1e}{extra}")
            elif args.all:
                print(f"  {e.bound.label} n/a: {e.reason}")
        print(f"  best_upper {rep.best_upper.bound.label} {polyio.fmt(rep.best_upper.value.value)}")
        print(f"  best_lower {rep.best_lower.bound.label} {polyio.fmt(rep.best_lower.value.value)}")
    return 0


def cmd_volume(args) -> int:
    try:
        vol = family_volume(args.family, args.n)
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(f"{polyio.fmt(vol.value)} +-{vol.abs_err:.1e}")
    return 0


def _parse_face(text: str):
    try:
        return int(text)
    except ValueError:
        if text in SELECTORS:
            return text
        raise argparse.ArgumentTypeError(
            f"--face takes a face id or one of {sorted(SELECTORS)}") from None


def cmd_double(args) -> int:
    out = []
    for P in _load(args.file):
        _check_valid(P)
        face = args.face
        if isinstance(face, int):
            if not 0 <= face < P.n_faces:
                raise UsageError(f"{P.name}: face {face} outside 0..{P.n_faces - 1}")
            # the given id is reused at each stage
            face = [face] * args.depth
        try:
            chain = double_chain(P, args.depth, face)
        except PolytopeError as e:
            raise CliError(str(e)) from None
        out.append(polyio.serialize(chain[-1]))
    _emit(args, "".join(out), args.output)
    return 0


def cmd_generate(args) -> int:
    try:
        if args.family == "antiprism":
            polys = [antiprism(args.n)]
        elif args.family == "loebell":
            polys = [loebell(args.n)]
        else:
            polys = list(octahedron_chain(args.n))
    except (ValueError, PolytopeError) as e:
        raise UsageError(str(e)) from None
    _emit(args, "".join(polyio.serialize(P) for P in polys), args.output)
    return 0


def _catalog(args):
    if args.catalog is None:
        return list(default_catalog())
    try:
        return polyio.load_catalog_dir(args.catalog)
    except OSError as e:
        raise CliError(str(e)) from None
    except PolytopeError as e:
        raise CliError(str(e)) from None


def cmd_verify(args) -> int:
    entries = _catalog(args)
    for e in entries:
        _check_valid(e.polytope)
    results = verify_suite(args.suite, entries)
    for r in results:
        print(r.line())
    fails = sum(r.verdict == FAILS for r in results)
    print(f"# {len(results)} results, {fails} failed", file=sys.stderr)
    return 1 if fails else 0


def cmd_report(args) -> int:
    entries = _catalog(args)
    for e in entries:
        _check_valid(e.polytope)
    _emit(args, polyio.report_text(entries), args.output)
    return 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rightangled",
                                 description="Right-angled hyperbolic polyhedra toolkit.")
    ap.add_argument("--output-dir", help="directory for relative -o paths")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_file(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", nargs="?", default="-", help="polytope file, '-' for stdin")
        p.set_defaults(func=func)
        return p

    with_file("validate", cmd_validate, "check the combinatorial structure")
    with_file("classify", cmd_classify, "compact, ideal, mixed or not realizable")
    with_file("stats", cmd_stats, "vertex, edge and face counts")
    p = with_file("bounds", cmd_bounds, "every applicable volume bound")
    p.add_argument("--all", action="store_true", help="also list inapplicable bounds")

    p = sub.add_parser("volume", help="closed-form volume of a family member")
    p.add_argument("--family", required=True, choices=("antiprism", "loebell"))
    p.add_argument("--n", required=True, type=int)
    p.set_defaults(func=cmd_volume)

    p = with_file("double", cmd_double, "double across a face")
    p.add_argument("--face", required=True, type=_parse_face,
                   help=f"face id, or a selector: {', '.join(sorted(SELECTORS))}")
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("-o", "--output")

    p = sub.add_parser("generate", help="write a family member")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int, help="n for antiprism/loebell, depth for the chain")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check the combinatorial claims over a catalog")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--catalog", help="directory of .poly files (default: built-in)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="CSV table of bounds over a catalog")
    p.add_argument("--catalog", help="directory of .poly files (default: built-in)")
    p.add_argument("-o", "--output", required=True, help="CSV path, '-' for stdout")
    p.set_defaults(func=cmd_report)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "depth", 1) < 0:
        print("rightangled: error: --depth must be non-negative", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as e:
        print(f"rightangled: error: {e}", file=sys.stderr)
        return 2
    except CliError as e:
        print(f"rightangled: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
