"""Command line interface.

Exit codes: 0 on success, 1 when a verification check fails (the first
counterexample is printed), 2 on usage or validation errors. Nothing here is
random; the ``TABLEAU_SEED`` environment variable is ignored.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import report as rp
from .bench import bench_staircase
from .enumeration import (
    enumerate_box_first,
    enumerate_box_last,
    enumerate_genomic,
    many_components_family,
    staircase_family,
    validate_triple,
)
from .local import local_esh, local_esh_reverse
from .monodromy import check_conjecture, curve_invariants, orbit_decomposition
from .punctured import PuncturedTableau
from .sweep import CHECKS, SweepSpec, run_sweep
from .tableau import Partition, Rectangle, parse_rows


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _triple(args):
    if args.alpha is None or args.beta is None or args.gamma is None or args.rect is None:
        raise UsageError("--alpha, --beta, --gamma and --rect are all required")
    try:
        alpha, beta, gamma = (Partition.parse(x) for x in (args.alpha, args.beta, args.gamma))
        rect = Rectangle.parse(args.rect)
        validate_triple(alpha, beta, gamma, rect)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return alpha, beta, gamma, rect


def _add_triple(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--alpha", required=required, help="inner partition, e.g. 2,2,1")
    p.add_argument("--beta", required=required, help="content partition")
    p.add_argument("--gamma", required=required, help="partition whose complement is the outer shape")
    p.add_argument("--rect", required=required, help="ambient rectangle ROWSxCOLS")


def _add_format(p: argparse.ArgumentParser, default: str = "text") -> None:
    p.add_argument("--format", choices=("text", "json"), default=default)


def cmd_enumerate(args) -> int:
    alpha, beta, gamma, rect = _triple(args)
    if args.set == "genomic":
        groups = enumerate_genomic(alpha, beta, gamma, rect)
        total = sum(len(v) for v in groups.values())
        if args.format == "json":
            _emit(rp.document(
                "genomic", **rp.triple_json(alpha, beta, gamma, rect), count=total,
                by_family={str(i): len(v) for i, v in groups.items()},
                tableaux=[g.to_json() for i in sorted(groups) for g in groups[i]],
            ))
        else:
            print(f"count\t{total}")
            for i in sorted(groups):
                print(f"family {i}\t{len(groups[i])}")
                for g in groups[i]:
                    print(f"  marked {sorted(g.marked)}")
                    for row in g.to_json()["rows"]:
                        print("    " + row)
        return 0
    items = (enumerate_box_first if args.set == "box-first" else enumerate_box_last)(alpha, beta, gamma, rect)
    if args.format == "json":
        _emit(rp.document(
            "tableaux", set=args.set, **rp.triple_json(alpha, beta, gamma, rect),
            count=len(items), tableaux=[pt.to_json() for pt in items],
        ))
    else:
        print(f"count\t{len(items)}")
        for k, pt in enumerate(items):
            print(f"[{k}]")
            for row in pt.rows():
                print("  " + row)
    return 0


def _read_tableau(path: str, direction: str) -> PuncturedTableau:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    stripped = text.strip()
    if stripped.startswith("{"):
        obj = json.loads(stripped)
        return PuncturedTableau.from_json(obj)
    T = parse_rows(stripped.splitlines())
    return PuncturedTableau.box_first(T) if direction == "forward" else PuncturedTableau.box_last(T)


def cmd_trace(args) -> int:
    if args.input is not None:
        try:
            pt = _read_tableau(args.input, args.direction)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read tableau: {exc}") from None
        rect = Rectangle.parse(args.rect) if args.rect else None
    else:
        if args.index is None:
            raise UsageError("give --input FILE or --index N with a triple")
        alpha, beta, gamma, rect = _triple(args)
        pool = (enumerate_box_first if args.direction == "forward" else enumerate_box_last)(alpha, beta, gamma, rect)
        if not 0 <= args.index < len(pool):
            raise UsageError(f"index {args.index} out of range 0..{len(pool) - 1}")
        pt = pool[args.index]
    try:
        end, path = (local_esh if args.direction == "forward" else local_esh_reverse)(pt)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.svg:
        rp.path_figure(pt, path, Path(args.svg), rect)
    if args.format == "json":
        _emit(rp.document("trace", direction=args.direction, input=pt.to_json(), output=end.to_json(), **path.to_json()))
    else:
        print("\n".join(rp.trace_text(pt, end, path)))
    return 0


def cmd_orbits(args) -> int:
    alpha, beta, gamma, rect = _triple(args)
    report = orbit_decomposition(alpha, beta, gamma, rect)
    if args.figure:
        rp.orbit_figure(report, Path(args.figure))
    if args.format == "json":
        _emit(rp.orbit_report_json(report))
    else:
        print(rp.orbit_table(report))
    return 0


def cmd_invariants(args) -> int:
    alpha, beta, gamma, rect = _triple(args)
    inv = curve_invariants(alpha, beta, gamma, rect)
    if args.format == "json":
        _emit(rp.document("invariants", **rp.triple_json(alpha, beta, gamma, rect), **inv.to_json()))
    else:
        print(rp.invariants_table(inv))
    return 0


def cmd_family(args) -> int:
    try:
        if args.staircase is not None:
            alpha, beta, gamma, rect = staircase_family(args.staircase)
        else:
            alpha, beta, gamma, rect = many_components_family(args.components)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = orbit_decomposition(alpha, beta, gamma, rect)
    inv = curve_invariants(alpha, beta, gamma, rect, report)
    verdicts = check_conjecture(alpha, beta, gamma, rect, report)
    if args.figure:
        rp.orbit_figure(report, Path(args.figure))
    if args.format == "json":
        _emit(rp.document(
            "family", **rp.triple_json(alpha, beta, gamma, rect),
            orbit_sizes=report.sizes, fixed_points=len(report.fixed_points),
            invariants=inv.to_json(), verdicts=[v.to_json() for v in verdicts],
        ))
    else:
        print(rp.tsv(("field", "value"), [
            ("alpha", ",".join(map(str, alpha))), ("beta", ",".join(map(str, beta))),
            ("gamma", ",".join(map(str, gamma))), ("rect", str(rect)),
            ("fixed_points", len(report.fixed_points)),
        ]))
        print()
        print(rp.invariants_table(inv))
        print()
        print(rp.verdict_table(verdicts))
    return 0


def cmd_verify(args) -> int:
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip()) if args.checks else CHECKS
    try:
        spec = SweepSpec(max_n=args.max_n, checks=checks, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = run_sweep(spec)
    if args.format == "json":
        _emit(rp.document(
            "verify", max_n=spec.max_n, checks=list(spec.checks), triples=result.triples,
            tableaux=result.tableaux, checked=dict(result.checked), ok=result.ok,
            failures=[f.to_json() for f in result.failures],
        ))
    else:
        print(f"triples\t{result.triples}")
        print(f"tableaux\t{result.tableaux}")
        for check in spec.checks:
            status = "FAIL" if result.failures_for(check) else "PASS"
            print(f"{check}\t{status}\t{result.checked.get(check, 0)}")
        if result.failures:
            f = result.failures[0]
            print("first counterexample:")
            print(json.dumps(f.to_json(), indent=2))
    return 0 if result.ok else 1


def cmd_bench(args) -> int:
    if args.t_min < 3 or args.t_max < args.t_min:
        raise UsageError("need 3 <= --t-min <= --t-max")
    rows = bench_staircase(range(args.t_min, args.t_max + 1), repeats=args.repeats)
    if args.figure:
        rp.bench_figure(rows, Path(args.figure))
    if args.format == "json":
        _emit(rp.document("bench", family="staircase", rows=[r.to_json() for r in rows]))
    else:
        print(rp.bench_table(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="evacshuffle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list box-first, box-last or genomic tableaux")
    _add_triple(p)
    p.add_argument("--set", choices=("box-first", "box-last", "genomic"), default="box-first")
    _add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("trace", help="step-by-step trace of the local algorithm")
    _add_triple(p, required=False)
    p.add_argument("--input", help="file with tableau rows or a JSON tableau ('-' for stdin)")
    p.add_argument("--index", type=int, help="index into the canonical ordering of the triple")
    p.add_argument("--direction", choices=("forward", "reverse"), default="forward")
    p.add_argument("--svg", help="write a path diagram to this file")
    _add_format(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("orbits", help="orbit decomposition of the monodromy")
    _add_triple(p)
    p.add_argument("--figure", help="write an orbit bar chart (svg/png by suffix)")
    _add_format(p)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("invariants", help="counts, Euler characteristic, genus")
    _add_triple(p)
    _add_format(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("family", help="run the pipeline on a named family")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--staircase", type=int, metavar="T")
    g.add_argument("--components", type=int, metavar="M")
    p.add_argument("--figure", help="write an orbit bar chart")
    _add_format(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="exhaustive checks over small rectangles")
    p.add_argument("--max-n", type=int, default=8, help="bound on rows + cols (default 8; 10 is slow)")
    p.add_argument("--checks", help="comma separated subset of: " + ", ".join(CHECKS))
    p.add_argument("--jobs", type=int, default=1)
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="local algorithm versus rectification oracle on staircases")
    p.add_argument("--t-min", type=int, default=3)
    p.add_argument("--t-max", type=int, default=7)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--figure", help="write a step-count plot")
    _add_format(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
