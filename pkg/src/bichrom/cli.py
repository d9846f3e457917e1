"""Command-line front end.

Exit codes: 0 success, 1 check mismatch, 2 usage or parse error,
3 domain error, 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import re
import sys
from typing import Sequence

from .bipoly import EvalPoint
from .check import CheckConfig, Methods, run_checks
from .elimination import EliminationBudget, bivariate_poly, bivariate_value
from .errors import (
    BichromError,
    BudgetExhausted,
    DegeneratePoint,
    DomainError,
    MethodUnavailable,
)
from .families import (
    KINDS,
    POLY_METHODS,
    VALUE_METHODS,
    FamilySpec,
    default_method,
    family_poly,
    family_value,
)
from .graphs import parse_edge_list
from .oracle import OracleBudget, count_colorings

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_DOMAIN, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=KINDS)
    src.add_argument("--graph-file", metavar="PATH", help="edge-list file ('p N' header, 'u v' lines)")
    p.add_argument("--n", type=int, help="vertex count for --family")


def _add_budgets(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int, default=10**6, help="elimination recursion budget")
    p.add_argument("--max-colorings", type=int, default=10**8, help="oracle enumeration budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bichrom", description="Bivariate chromatic polynomials of paths, cycles, stars and small graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print P(G, x, y)")
    _add_source(p)
    p.add_argument("--method", choices=POLY_METHODS)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    _add_budgets(p)

    p = sub.add_parser("eval", help="print P(G, x, y) at one point")
    _add_source(p)
    p.add_argument("-x", type=int, required=True)
    p.add_argument("-y", type=int, required=True)
    p.add_argument("--method", choices=VALUE_METHODS)
    _add_budgets(p)

    p = sub.add_parser("check", help="cross-check every method against every other and the oracle")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--x-max", type=int, default=4)
    p.add_argument("--oracle-vertex-max", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("table", help="CSV of values over ranges of n, x, y")
    p.add_argument("--family", choices=KINDS, required=True)
    p.add_argument("--n-range", required=True, metavar="A..B")
    p.add_argument("--x-range", required=True, metavar="A..B")
    p.add_argument("--y-range", required=True, metavar="A..B")
    p.add_argument("--method", choices=VALUE_METHODS)
    _add_budgets(p)
    return parser


_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


def parse_range(text: str) -> range:
    m = _RANGE.match(text)
    if not m:
        raise UsageError(f"malformed range {text!r} (expected A..B)")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    return range(lo, hi + 1)


def _load_graph(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _family(args) -> FamilySpec:
    if args.n is None:
        raise UsageError("--family requires --n")
    return FamilySpec(args.family, args.n)


def cmd_poly(args, out) -> int:
    budget = EliminationBudget(args.max_nodes)
    if args.graph_file:
        if args.method not in (None, "elim"):
            raise MethodUnavailable("graph files support only --method elim")
        poly = bivariate_poly(_load_graph(args.graph_file), budget)
    else:
        spec = _family(args)
        poly = family_poly(spec, args.method or default_method(spec.kind), budget)
    render = {"text": poly.to_text, "json": poly.to_json, "latex": poly.to_latex}[args.format]
    print(render(), file=out)
    return EXIT_OK


def cmd_eval(args, out) -> int:
    at = EvalPoint(args.x, args.y)
    budget = EliminationBudget(args.max_nodes)
    oracle_budget = OracleBudget(args.max_colorings)
    if args.graph_file:
        g = _load_graph(args.graph_file)
        method = args.method or "elim"
        if method == "elim":
            value = bivariate_value(g, at, budget)
        elif method == "oracle":
            value = count_colorings(g, at, oracle_budget)
        else:
            raise MethodUnavailable("graph files support only --method elim or oracle")
    else:
        spec = _family(args)
        method = args.method or default_method(spec.kind)
        try:
            value = family_value(spec, at, method, budget, oracle_budget)
        except DegeneratePoint as exc:
            raise DegeneratePoint(f"{exc}; use --method rec instead") from None
    print(value, file=out)
    return EXIT_OK


def cmd_check(args, out, methods: Methods | None = None) -> int:
    cfg = CheckConfig(
        n_max=args.n_max, x_max=args.x_max, oracle_vertex_max=args.oracle_vertex_max, seed=args.seed
    )
    report = run_checks(cfg, methods)
    print(report.render(), file=out)
    cex = report.first_counterexample
    if cex is not None:
        print(cex.render(), file=out)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_table(args, out) -> int:
    ns, xs, ys = parse_range(args.n_range), parse_range(args.x_range), parse_range(args.y_range)
    method = args.method or default_method(args.family)
    budget = EliminationBudget(args.max_nodes)
    oracle_budget = OracleBudget(args.max_colorings)
    rows = []
    for n in ns:
        spec = FamilySpec(args.family, n)
        poly = None
        if method in POLY_METHODS:
            poly = family_poly(spec, method, budget)
        for x in xs:
            for y in ys:
                if y > x:
                    continue
                at = EvalPoint(x, y)
                if poly is not None:
                    value = poly.eval(at)
                elif method == "closed" and spec.kind == "path" and at.is_degenerate:
                    # the path closed form is undefined here; use the recurrence value
                    value = family_value(spec, at, "rec")
                else:
                    value = family_value(spec, at, method, budget, oracle_budget)
                rows.append((args.family, n, x, y, value))
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("family", "n", "x", "y", "value"))
    writer.writerows(rows)
    return EXIT_OK


def main(argv: Sequence[str] | None = None, out=None, err=None, methods: Methods | None = None) -> int:
    """Run the CLI; ``methods`` replaces the callables under test in ``check``."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "poly":
            return cmd_poly(args, out)
        if args.command == "eval":
            return cmd_eval(args, out)
        if args.command == "check":
            return cmd_check(args, out, methods)
        return cmd_table(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        print(f"error [{exc.code}]: {exc}", file=err)
        return EXIT_BUDGET
    except DomainError as exc:
        print(f"error [{exc.code}]: {exc}", file=err)
        return EXIT_DOMAIN
    except BichromError as exc:
        print(f"error [{exc.code}]: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
