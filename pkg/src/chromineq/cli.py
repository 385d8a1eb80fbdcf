"""Command-line front end: ``poly``, ``verify`` and ``oracle`` subcommands."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .chromatic import b_distribution, chromatic_polynomial, coefficients, epsilon_mean
from .formats import GraphFormatError, GraphRecord, from_graph6, iter_graphs, to_graph6
from .orientations import count_acyclic, count_unique_source, interp_coefficient_orientation
from .verify import (
    DEFAULT_GRID,
    DEFAULT_THEOREMS,
    ERROR,
    MAX_ENUMERATION_ORDER,
    MAX_ORACLE_ORDER,
    ORACLES,
    THEOREMS,
    VIOLATION,
    BudgetError,
    Summary,
    oracle_reports,
    sweep,
)

JOBS_ENV = "CHROMINEQ_JOBS"


def _approx(q) -> str:
    q = Fraction(q)
    return str(q) if q.denominator == 1 else f"{q} (~{float(q):.6g})"


def _parse_grid(text: str) -> tuple[Fraction, ...]:
    try:
        points = tuple(Fraction(t.strip()) for t in text.split(",") if t.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad grid value: {exc}")
    if not points:
        raise argparse.ArgumentTypeError("grid is empty")
    if any(x >= 0 for x in points):
        raise argparse.ArgumentTypeError("grid values must all be negative")
    return points


def _names(text: str, allowed: Sequence[str], what: str) -> tuple[str, ...]:
    if text in ("all",):
        return tuple(allowed)
    if text in ("", "none"):
        return ()
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    for name in names:
        if name not in allowed:
            raise argparse.ArgumentTypeError(f"unknown {what} {name!r}; choose from {', '.join(allowed)}")
    return names


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _records(args) -> Iterator[GraphRecord]:
    """Graphs from positional graph6 strings, ``--input`` or stdin."""
    if getattr(args, "graphs", None):
        for k, text in enumerate(args.graphs, start=1):
            try:
                yield GraphRecord(k, from_graph6(text), text=text)
            except ValueError as exc:
                yield GraphRecord(k, error=GraphFormatError(str(exc), k), text=text)
        return
    if args.input in (None, "-"):
        yield from iter_graphs(sys.stdin, args.input_format)
        return
    with open(args.input, encoding="utf-8") as fh:
        yield from iter_graphs(fh, args.input_format)


def _emit(args, obj: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _error(args, rec: GraphRecord) -> None:
    obj = {"line": rec.line, "input": rec.text, "error": str(rec.error)}
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(f"error: {rec.error}", file=sys.stderr)


# -- poly --------------------------------------------------------------------------------


def cmd_poly(args) -> int:
    status = 0
    for rec in _records(args):
        if rec.error is not None:
            _error(args, rec)
            status = 1
            continue
        g = rec.graph
        cache: dict = {}
        p = chromatic_polynomial(g, cache=cache)
        a = coefficients(p)
        eps = epsilon_mean(g, cache=cache) if g.n else Fraction(0)
        b = b_distribution(g, cache=cache) if g.n else ()
        obj = {
            "graph6": to_graph6(g),
            "n": g.n,
            "m": g.m,
            "coefficients": list(p.coeffs) or [0],
            "a": list(a.a),
            "epsilon": str(eps),
            "b": [str(x) for x in b],
        }
        text = "\n".join(
            [
                f"graph {obj['graph6']}  n={g.n} m={g.m}",
                f"  P(x) = {p}",
                f"  coefficients (x^0..x^n): {obj['coefficients']}",
                f"  a_1..a_n: {list(a.a)}",
                f"  epsilon: {_approx(eps)}",
                f"  b_0..b_(n-1): {', '.join(_approx(x) for x in b)}",
            ]
        )
        _emit(args, obj, text)
    return status


# -- verify -------------------------------------------------------------------------------


def _report_text(r) -> str:
    parts = [f"{r.graph6 or '-'}", f"n={r.n}", r.theorem, r.outcome]
    if r.certificate_kind:
        parts.append(f"[{r.certificate_kind}]")
    if r.outcome in (VIOLATION, ERROR):
        parts.append(json.dumps(r.to_json()["witness"], sort_keys=True))
    return " ".join(parts)


def cmd_verify(args) -> int:
    if args.input is None and not args.graphs:
        if not 1 <= args.max_n <= MAX_ENUMERATION_ORDER:
            print(f"error: --max-n must be between 1 and {MAX_ENUMERATION_ORDER}", file=sys.stderr)
            return 2
        source = None
    else:
        source = _records(args)
    theorems = args.theorem or DEFAULT_THEOREMS
    acc = Summary()
    try:
        for r in sweep(args.max_n, source, theorems, args.oracles, args.grid, args.jobs):
            acc.add(r)
            if not args.quiet or r.outcome in (VIOLATION, ERROR):
                _emit(args, r.to_json(), _report_text(r))
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    summary = acc.as_dict()
    if args.format == "json":
        print(json.dumps({"summary": summary}, sort_keys=True))
    else:
        print(f"graphs: {summary['graphs']}  violations: {summary['violations']}")
        for theorem, counts in summary["by_theorem"].items():
            print(f"  {theorem}: " + ", ".join(f"{k}={v}" for k, v in counts.items()))
    return 0 if summary["violations"] == 0 else 1


# -- oracle -------------------------------------------------------------------------------


def _orientation_summary(g) -> dict:
    """alpha, alpha(G,v) for every v and the anchored-partition a_i for every v."""
    p = chromatic_polynomial(g)
    a = list(coefficients(p).a)
    alpha = count_acyclic(g)
    alpha_v = {v: count_unique_source(g, v) for v in g.vertices}
    memo: dict = {}
    by_anchor = {
        v: [interp_coefficient_orientation(g, i, v, memo) for i in range(1, g.n + 1)] for v in g.vertices
    }
    match = (
        alpha == (-1) ** g.n * p(-1)
        and all(x == (a[0] if a else 0) for x in alpha_v.values())
        and all(row == a for row in by_anchor.values())
    )
    return {
        "graph6": to_graph6(g),
        "n": g.n,
        "alpha": alpha,
        "alpha_v": alpha_v,
        "a": a,
        "a_by_anchor": by_anchor,
        "match": match,
    }


def cmd_oracle(args) -> int:
    which = ORACLES if args.which == "all" else (args.which,)
    status = 0
    for rec in _records(args):
        if rec.error is not None:
            _error(args, rec)
            status = max(status, 2)
            continue
        g = rec.graph
        if g.n > MAX_ORACLE_ORDER:
            msg = f"graph {to_graph6(g)} has n={g.n}; oracles are limited to n <= {MAX_ORACLE_ORDER}"
            _emit(args, {"graph6": to_graph6(g), "n": g.n, "error": msg}, f"error: {msg}")
            status = max(status, 2)
            continue
        if args.which == "orientations":
            obj = _orientation_summary(g)
            text = (
                f"{obj['graph6']} n={g.n} alpha={obj['alpha']} alpha(G,v)={list(obj['alpha_v'].values())} "
                f"a={obj['a']} match={obj['match']}"
            )
            _emit(args, obj, text)
            if not obj["match"]:
                status = max(status, 1)
            continue
        for r in oracle_reports(g, which):
            match = r.outcome != VIOLATION
            w = r.witness
            obj = {
                "graph6": r.graph6,
                "n": r.n,
                "oracle": r.theorem,
                "engine": w["engine"],
                "oracle_value": w["oracle"],
                "match": match,
            }
            text = f"{r.graph6} n={r.n} {r.theorem}: engine={w['engine']} oracle={w['oracle']} match={match}"
            _emit(args, obj, text)
            if not match:
                status = max(status, 1)
    return status


# -- entry point --------------------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("graphs", nargs="*", help="graph6 strings (alternative to --input)")
    p.add_argument("--input", help="graph file (graph6 lines or edge-list blocks); '-' reads stdin")
    p.add_argument(
        "--input-format", choices=("auto", "graph6", "edgelist"), default="auto",
        help="input format (default: detect from the first line)",
    )
    p.add_argument("--format", choices=("json", "text"), default="text", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromineq",
        description="Exact chromatic polynomials and verification of mean-size inequalities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="chromatic polynomial, a_i, mean BCF size and b_i per graph")
    _add_input(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", help="sweep graphs and check the inequalities")
    _add_input(p)
    p.add_argument("--max-n", type=int, default=6, help=f"largest order to enumerate (at most {MAX_ENUMERATION_ORDER})")
    p.add_argument(
        "--theorem", action="append", choices=THEOREMS,
        help="check to run; repeatable (default: conjecture and pos-d)",
    )
    p.add_argument(
        "--oracles", type=lambda t: _names(t, ORACLES, "oracle"), default=(),
        help="'all', 'none' or a comma list of " + ", ".join(ORACLES),
    )
    p.add_argument(
        "--grid", type=_parse_grid, default=DEFAULT_GRID,
        help="comma-separated negative rationals, written --grid=-1/4,-2",
    )
    p.add_argument("--jobs", type=int, default=None, help=f"worker processes (default: ${JOBS_ENV} or 1)")
    p.add_argument("--quiet", action="store_true", help="print only violations, errors and the summary")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="compare engine coefficients with an independent oracle")
    p.add_argument("which", choices=ORACLES + ("orientations", "all"))
    _add_input(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 0) is None:
        args.jobs = _default_jobs()
    if args.command == "verify" and args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
