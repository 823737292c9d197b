"""Command-line entry point.

Exit codes: 0 every check passed, 1 an identity failed, 2 usage or parse
error, 3 invalid input, 4 the oracle could not find generic slices.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from .bridge import (
    MAX_COLORING_VERTICES,
    MAX_SUBSETS,
    EmptyGraph,
    GraphError,
    LoopColumn,
    RepresentedMatroid,
    TooLarge,
    chromatic_deletion_contraction,
    chromatic_via_arrangement,
    count_proper_colorings,
    matroid_char_poly_subsets,
)
from .core import ArrangementError, canonical_normal, char_poly_lattice, make_arrangement
from .exact import Poly, format_poly
from .formats import ParseError, parse_arrangement, parse_graph, parse_matrix
from .multidegrees import EmptyArrangement, multidegrees_dr
from .report import FAIL, INCONCLUSIVE, report_to_json, verify

EXIT_OK, EXIT_IDENTITY, EXIT_USAGE, EXIT_INVALID, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _Exit(EXIT_USAGE, f"{path}: cannot read: {exc.strerror}") from None


def _load(path: str, parser):
    text = _read(path)
    try:
        return parser(text)
    except ParseError as exc:
        raise _Exit(EXIT_USAGE, f"{path}:{exc.line}:{exc.column}: {exc.message}") from None
    except (ArrangementError, GraphError, LoopColumn) as exc:
        raise _Exit(EXIT_INVALID, f"{path}: {exc}") from None


def _out(line: str = "") -> None:
    print(line)


def cmd_charpoly(args) -> int:
    a = _load(args.input, parse_arrangement)
    _out(format_poly(char_poly_lattice(a)))
    return EXIT_OK


def cmd_multidegrees(args) -> int:
    a = _load(args.input, parse_arrangement)
    try:
        d = multidegrees_dr(a)
    except EmptyArrangement as exc:
        raise _Exit(EXIT_INVALID, f"{args.input}: {exc}") from None
    _out(" ".join(str(v) for v in d.values))
    return EXIT_OK


def cmd_verify(args) -> int:
    a = _load(args.input, parse_arrangement)
    try:
        r = verify(a, trials=args.trials, seed=args.seed, oracle=not args.no_oracle, max_subsets=args.max_subsets)
    except EmptyArrangement as exc:
        raise _Exit(EXIT_INVALID, f"{args.input}: {exc}") from None

    lines = [
        f"characteristic polynomial: {format_poly(Poly(list(r.char_poly_lattice)))}",
        f"multidegrees: {' '.join(str(v) for v in r.multidegrees_dr)}",
    ]
    o = r.oracle_partial
    if o is None:
        lines.append("oracle: not run")
    else:
        counts = " ".join(f"a{i}={v}" for i, v in sorted(o.critical_counts.items()))
        full = "" if o.full is None else f" full={' '.join(str(v) for v in o.full)}"
        lines.append(f"oracle: {counts} d1={o.d1} d2={o.d2}{full} consistent={'yes' if o.consistent else 'no'}")
    for name, state in r.identities_checked:
        lines.append(f"  {name}: {state.upper()}")
    s = r.sequence_report
    lines.append(
        "sequence: "
        f"log-concave={'yes' if s.is_log_concave else 'no'} "
        f"internal-zeros={'yes' if s.has_internal_zeros else 'no'} "
        f"unimodal={'yes' if s.is_unimodal else 'no'}"
    )
    lines.append(f"status: {r.status.upper()}")
    for line in lines:
        _out(line)
    print("timing: " + ", ".join(f"{k} {v:.3f}s" for k, v in r.timing.items()), file=sys.stderr)

    if args.json:
        try:
            Path(args.json).write_text(report_to_json(r))
        except OSError as exc:
            raise _Exit(EXIT_USAGE, f"{args.json}: cannot write: {exc.strerror}") from None

    if r.status == FAIL:
        return EXIT_IDENTITY
    if r.status == INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_chromatic(args) -> int:
    g = _load(args.input, parse_graph)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", EmptyGraph)
        chi = chromatic_via_arrangement(g)
    for w in caught:
        if issubclass(w.category, EmptyGraph):
            print("warning: no edges", file=sys.stderr)
    _out(format_poly(chi))

    if args.check_colorings is None:
        return EXIT_OK
    tmax = args.check_colorings
    try:
        counts = [count_proper_colorings(g, t, MAX_COLORING_VERTICES) for t in range(tmax + 1)]
    except TooLarge as exc:
        raise _Exit(EXIT_INVALID, f"{args.input}: {exc}") from None
    dc = chromatic_deletion_contraction(g)
    ok = dc == chi and all(chi(t) == c for t, c in enumerate(counts))
    _out(f"colorings check: {'PASS' if ok else 'FAIL'} (t=0..{tmax})")
    return EXIT_OK if ok else EXIT_IDENTITY


def cmd_matroid(args) -> int:
    m = _load(args.input, parse_matrix)
    try:
        matroid = RepresentedMatroid(m)
        chi_m = matroid_char_poly_subsets(matroid, args.max_subsets)
    except (LoopColumn, TooLarge) as exc:
        raise _Exit(EXIT_INVALID, f"{args.input}: {exc}") from None
    _out(f"chi_M: {format_poly(chi_m)}")

    canon = [canonical_normal(c) for c in matroid.columns()]
    if len(set(canon)) < len(canon):
        _out("note: parallel columns, the arrangement path is unavailable")
        return EXIT_OK
    a = make_arrangement(m.rows, matroid.columns())
    chi_a = char_poly_lattice(a)
    shift = chi_a.degree - chi_m.degree
    ok = shift >= 0 and Poly.monomial(shift) * chi_m == chi_a
    _out(f"chi_A: {format_poly(chi_a)}")
    _out(f"shift: {shift}")
    _out(f"chi_A = t^{shift} * chi_M: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_IDENTITY


def _trials(text: str) -> int:
    n = int(text)
    if n < 3:
        raise argparse.ArgumentTypeError("trials must be >= 3 for the oracle")
    return n


def _nonnegative(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arrangements",
        description="Characteristic polynomials of central hyperplane arrangements, cross-checked.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", help="print the characteristic polynomial")
    p.add_argument("input")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("multidegrees", help="print the multidegree sequence")
    p.add_argument("input")
    p.set_defaults(func=cmd_multidegrees)

    p = sub.add_parser("verify", help="run every route and cross-check")
    p.add_argument("input")
    p.add_argument("--trials", type=_trials, default=3)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--max-subsets", type=_nonnegative, default=MAX_SUBSETS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chromatic", help="chromatic polynomial of a graph")
    p.add_argument("input")
    p.add_argument("--check-colorings", type=_nonnegative, metavar="TMAX")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("matroid", help="characteristic polynomial of a represented matroid")
    p.add_argument("input")
    p.add_argument("--max-subsets", type=_nonnegative, default=MAX_SUBSETS)
    p.set_defaults(func=cmd_matroid)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
