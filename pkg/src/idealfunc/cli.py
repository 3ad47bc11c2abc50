"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification-suite failure.  All
numeric output is locale-independent with `.` as the decimal separator.
The environment variable IDEALFUNC_THREADS is accepted for compatibility
with parallel sweeps; the computation is deterministic and bit-identical
regardless of its value.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Sequence

from . import analytic, summatory, verify
from .analytic import AnalyticValue, EvalOptions
from .field import FieldSpec, parse_field
from .ideals import enumerate_ideals, format_ideal

__all__ = ["main", "run"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="idealfunc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_field(p: argparse.ArgumentParser) -> None:
        p.add_argument("--field", required=True,
                       help="field designation: q, q:<m>, or table:<path>")

    def add_format(p: argparse.ArgumentParser, default: str = "plain") -> None:
        p.add_argument("--format", choices=("csv", "json", "plain"), default=default)

    p = sub.add_parser("field", help="describe a field designation")
    add_field(p)
    add_format(p)

    p = sub.add_parser("enumerate", help="stream all ideals with norm <= xmax")
    add_field(p)
    p.add_argument("--xmax", type=float, required=True)
    add_format(p, default="csv")

    p = sub.add_parser("eval", help="evaluate one arithmetic function at one ideal")
    add_field(p)
    p.add_argument("--fn", choices=("mobius", "liouville", "qfree", "jordan"), required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--ideal", required=True,
                   help="NORM or NORM:IDX, the IDX-th ideal of that norm in canonical order")
    add_format(p)

    p = sub.add_parser("sum", help="exact summatory value at one x")
    add_field(p)
    p.add_argument("--fn", choices=("mobius", "liouville", "qfree"), required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--fast", action="store_true",
                   help="use the exact inversion formula (qfree only)")
    add_format(p)

    p = sub.add_parser("report", help="remainder reports over a geometric grid")
    add_field(p)
    p.add_argument("--theorem", choices=("1", "2", "3"), required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--grid", required=True, help="a:b:points (geometric)")
    add_format(p, default="csv")

    p = sub.add_parser("verify", help="run a brute-force invariant suite")
    add_field(p)
    p.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    p.add_argument("--xmax", type=int, default=5000)
    p.add_argument("--kmax", type=int, default=4)

    p = sub.add_parser("zeta", help="Dedekind zeta value at real s > 1")
    add_field(p)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--tol", type=float, default=None)
    add_format(p, default="json")

    p = sub.add_parser("constant", help="leading constant of the order-k Mobius sum")
    add_field(p)
    p.add_argument("--order", type=int, required=True)
    add_format(p, default="json")

    return parser


def _check_threads_env() -> None:
    raw = os.environ.get("IDEALFUNC_THREADS")
    if raw is None:
        return
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"IDEALFUNC_THREADS={raw!r} is not an integer") from None
    if n < 1:
        raise UsageError("IDEALFUNC_THREADS must be >= 1")


def _analytic_json(v: AnalyticValue) -> str:
    return json.dumps({"value": v.value, "tail_bound": v.tail_bound, "method": v.method})


def _parse_grid(spec: str) -> list[float]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise UsageError(f"bad grid {spec!r}, expected a:b:points")
    try:
        a, b, points = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"bad grid {spec!r}") from None
    if a < 1 or b < a or points < 1:
        raise UsageError("grid needs 1 <= a <= b and points >= 1")
    if points == 1:
        return [a]
    ratio = (b / a) ** (1.0 / (points - 1))
    grid = [a * ratio**i for i in range(points)]
    grid[-1] = b
    return grid


def _find_ideal(field: FieldSpec, spec: str):
    parts = spec.split(":")
    try:
        norm = int(parts[0])
        idx = int(parts[1]) if len(parts) > 1 else 0
    except (ValueError, IndexError):
        raise UsageError(f"bad ideal designation {spec!r}, expected NORM[:IDX]") from None
    if norm < 1 or idx < 0:
        raise UsageError("ideal norm must be >= 1 and index >= 0")
    matches = [A for A in enumerate_ideals(field, norm) if A.norm == norm]
    if idx >= len(matches):
        raise UsageError(f"no ideal of norm {norm} with index {idx} "
                         f"({len(matches)} such ideals exist)")
    return matches[idx]


def _cmd_field(args, out) -> int:
    field = parse_field(args.field)
    info = {"label": field.label, "degree": field.degree, "discriminant": field.disc}
    if args.format == "json":
        print(json.dumps(info), file=out)
    else:
        print(f"label={field.label} degree={field.degree} discriminant={field.disc}",
              file=out)
    return 0


def _cmd_enumerate(args, out) -> int:
    field = parse_field(args.field)
    if args.xmax < 1:
        raise UsageError("--xmax must be >= 1")
    print("norm,factorization", file=out)
    for A in enumerate_ideals(field, args.xmax):
        print(f"{A.norm},{format_ideal(A)}", file=out)
    return 0


def _cmd_eval(args, out) -> int:
    from . import arith

    field = parse_field(args.field)
    A = _find_ideal(field, args.ideal)
    k = args.order
    try:
        if args.fn == "mobius":
            value = arith.mu_k(k, A)
        elif args.fn == "liouville":
            value = arith.lambda_k(k, A)
        elif args.fn == "qfree":
            value = arith.q_k(k, A)
        else:
            value = arith.jordan_totient(k, A)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(value, file=out)
    return 0


def _cmd_sum(args, out) -> int:
    field = parse_field(args.field)
    if args.x < 1:
        raise UsageError("--x must be >= 1")
    if args.fast and args.fn != "qfree":
        raise UsageError("--fast applies to --fn qfree only")
    try:
        if args.fn == "mobius":
            value = summatory.mertens_k(field, args.order, args.x)
        elif args.fn == "liouville":
            value = summatory.liouville_sum_k(field, args.order, args.x)
        elif args.fast:
            value = summatory.qfree_count_fast(field, args.order, args.x)
        else:
            value = summatory.qfree_count(field, args.order, args.x)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(value, file=out)
    return 0


def _cmd_report(args, out) -> int:
    field = parse_field(args.field)
    grid = _parse_grid(args.grid)
    kind = {"1": "mobius", "2": "liouville", "3": "qfree"}[args.theorem]
    try:
        reports = summatory.sweep(kind, field, args.order, grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        rows = [{"field": r.field, "fn": r.fn, "k": r.k, "x": r.x, "raw": r.raw,
                 "main": r.main, "remainder": r.remainder,
                 "normalizer": r.normalizer, "normalized": r.normalized}
                for r in reports]
        print(json.dumps(rows), file=out)
    else:
        print(summatory.CSV_HEADER, file=out)
        for r in reports:
            print(r.csv_row(), file=out)
    return 0


def _cmd_verify(args, out) -> int:
    field = parse_field(args.field)
    suite = verify.SUITES[args.suite]
    results = suite(field, xmax=args.xmax, kmax=args.kmax)
    failed = False
    for r in results:
        print(r.line(), file=out)
        failed = failed or not r.ok
    print(("FAILED" if failed else "passed") + f" {args.suite} suite: "
          f"{sum(not r.ok for r in results)} of {len(results)} checks failed", file=out)
    return 2 if failed else 0


def _opts_for_tol(tol: float | None, s: float) -> EvalOptions:
    if tol is None:
        return analytic.DEFAULT_OPTIONS
    if tol <= 0:
        raise UsageError("--tol must be positive")
    cutoff = int(min(2e6, max(1e4, math.ceil((4.0 / (tol * (s - 1))) ** (1.0 / (s - 1))))))
    return EvalOptions(rel_tol=tol, prime_cutoff=cutoff, series_cutoff=cutoff)


def _cmd_zeta(args, out) -> int:
    field = parse_field(args.field)
    try:
        value = analytic.dedekind_zeta(field, args.s, _opts_for_tol(args.tol, args.s))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(_analytic_json(value), file=out)
    return 0


def _cmd_constant(args, out) -> int:
    field = parse_field(args.field)
    try:
        value = analytic.mobius_density_constant(field, args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(_analytic_json(value), file=out)
    return 0


_COMMANDS = {
    "field": _cmd_field,
    "enumerate": _cmd_enumerate,
    "eval": _cmd_eval,
    "sum": _cmd_sum,
    "report": _cmd_report,
    "verify": _cmd_verify,
    "zeta": _cmd_zeta,
    "constant": _cmd_constant,
}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _build_parser()
    try:
        _check_threads_env()
        args = parser.parse_args(list(argv) if argv is not None else None)
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return 1


def run(argv: Sequence[str]) -> int:
    """Alias for main(), for programmatic use."""
    return main(argv)


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
