"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 valid but non-admissible
knot, 3 verification failure.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from itertools import product
from math import gcd
from typing import Iterator, Sequence

from .cablespace import (
    CableSpace,
    SurfaceClass,
    SurfaceKind,
    horizontal_class,
    planar_a_class,
    planar_b_class,
    vertical_class,
)
from .grid import GridSpec, SearchTarget, compute_rows, enumerate_knots, format_rows, search
from .spectrum import (
    InadmissibleKnotError,
    InvalidKnotError,
    IteratedTorusKnot,
    KnotParseError,
    spectrum_report,
)
from .verify import FAULTS, VerifyConfig, run_all

EXIT_OK, EXIT_USAGE, EXIT_INADMISSIBLE, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _span(text: str) -> range:
    lo, sep, hi = text.partition(":")
    try:
        a, b = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI or N, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def _grid_args(parser: argparse.ArgumentParser, p_max: int, q_max: int, depth: int) -> None:
    parser.add_argument("--p-max", type=int, default=p_max, help=f"bound on |p_i| (default {p_max})")
    parser.add_argument("--q-max", type=int, default=q_max, help=f"bound on q_i (default {q_max})")
    parser.add_argument("--depth", type=int, default=depth, help=f"maximum number of cables (default {depth})")
    parser.add_argument("--admissible-only", action="store_true")


def _grid(args) -> GridSpec:
    return GridSpec(args.p_max, args.q_max, args.depth, args.admissible_only)


@contextlib.contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        yield fh


def _emit(obj, out) -> None:
    out.write(json.dumps(obj) + "\n")


def cmd_spectrum(args) -> int:
    knot = IteratedTorusKnot.parse(args.knot)
    report = spectrum_report(knot)
    with _output(args.output) as out:
        if args.format == "csv":
            s = report["spectrum"]
            out.write("knot,spectrum,gaps,tunnel_number,h_genus\n")
            g = ";".join(f"{x['index']}:{x['order']}" for x in report["gaps"])
            out.write(f"\"{knot}\",{';'.join(map(str, s))},{g},{report['tunnel_number']},{report['h_genus']}\n")
        else:
            _emit(report, out)
    return EXIT_OK


FAMILIES = [k.value for k in SurfaceKind]


def iter_classes(cs: CableSpace, families: Sequence[str], m: range, n: range, l: range, k: range) -> Iterator[SurfaceClass]:
    """Classes in family order, each family ordered by its parameters."""
    for family in FAMILIES:
        if family not in families:
            continue
        if family == "vertical":
            yield vertical_class(cs)
        elif family == "horizontal":
            for mm, nn in product(m, n):
                if nn >= 0 and gcd(mm, nn) == 1:
                    yield horizontal_class(cs, mm, nn)
        elif family == "planar-a":
            for ll, mm in product(l, m):
                if abs(ll * cs.q - mm * cs.p) == 1:
                    yield planar_a_class(cs, ll, mm)
        else:
            for kk in k:
                yield planar_b_class(cs, kk)


def cmd_classify(args) -> int:
    cs = CableSpace(args.p, args.q)
    families = args.family or FAMILIES
    with _output(args.output) as out:
        for cls in iter_classes(cs, families, args.m, args.n, args.l, args.k):
            _emit(cls.to_json(), out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    grid = _grid(args)
    fmt = "csv" if args.format == "csv" else "jsonl"
    tally = {"rows": 0, "admissible": 0}

    def counted(rows):
        for row in rows:
            tally["admissible"] += row["admissible"]
            yield row

    with _output(args.output) as out:
        tally["rows"] = format_rows(counted(compute_rows(enumerate_knots(grid))), fmt, out)
    print(f"rows: {tally['rows']} (admissible {tally['admissible']})", file=sys.stderr)
    return EXIT_OK


def cmd_search(args) -> int:
    target = SearchTarget.parse(args.target)
    found = search(_grid(args), target)
    with _output(args.output) as out:
        if args.format == "jsonl":
            for knot in found:
                _emit(knot.to_json(), out)
        elif args.format == "csv":
            out.write("knot\n")
            out.writelines(f"\"{knot}\"\n" for knot in found)
        else:
            _emit([knot.to_json() for knot in found], out)
    print(f"matches: {len(found)}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = VerifyConfig(grid=_grid(args), fault=args.inject_fault)
    results = run_all(cfg)
    with _output(args.output) as out:
        if args.format in ("json", "jsonl"):
            _emit([r.to_json() for r in results], out)
        else:
            for r in results:
                out.write(r.line() + "\n")
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} suites passed", file=sys.stderr)
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cablecalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, formats=("json", "csv", "jsonl"), default="json"):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--output", metavar="PATH", help="write here instead of stdout")
        p.set_defaults(func=func)
        return p

    p = add("spectrum", cmd_spectrum, "spectrum report for one knot")
    p.add_argument("knot", help='"(p0,q0),(p1,q1),..." or a JSON descriptor')

    p = add("classify", cmd_classify, "incompressible surface classes of a cable space", formats=("json", "jsonl"))
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--family", action="append", choices=FAMILIES, help="repeatable; default all")
    for flag, default in (("--m", "-3:3"), ("--n", "0:3"), ("--l", "-3:3"), ("--k", "-3:3")):
        p.add_argument(flag, type=_span, default=_span(default), metavar="LO:HI", help=f"default {default}")

    p = add("enumerate", cmd_enumerate, "one row per valid knot in a grid", formats=("csv", "jsonl", "json"), default="csv")
    _grid_args(p, 10, 4, 1)

    p = add("search", cmd_search, "grid knots with a given spectrum or gap list")
    _grid_args(p, 25, 4, 1)
    p.add_argument("--target", required=True, metavar="SPEC", help='"spectrum=8,3,0" or "gaps=(1,5),(2,3)"')

    p = add("verify", cmd_verify, "run every property suite over a grid", formats=("text", "json"), default="text")
    _grid_args(p, 10, 4, 2)
    p.add_argument("--inject-fault", choices=FAULTS, help=argparse.SUPPRESS)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except KnotParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InadmissibleKnotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except (InvalidKnotError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
