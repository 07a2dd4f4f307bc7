"""Command line front end: tables, evaluations, series dumps, identity suite.

Exit codes: 0 all requested checks pass, 1 an identity check failed,
2 usage error, 3 domain error (structurally valid flags that cannot be
satisfied, e.g. an r bound for a family that does not take one).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import identities, sequences
from .algebra import Poly, parse_rational, poly_eval
from .identities import Grid, UnknownIdentityError
from .series import Series, dexp, dlog, dpolylog, ser_compose, ser_mul, ser_reciprocal

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

TRIANGLE_FAMILIES = ("s1", "s2")
SCALAR_FAMILIES = ("harmonic", "hyperharmonic")
POLY_FAMILIES = ("bernoulli", "euler", "bell", "fubini")


def _rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(parse_rational(part) for part in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenmath",
        description="exact degenerate special-number tables and identity checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print a triangle, sequence, or polynomial family")
    table.add_argument("family", choices=TRIANGLE_FAMILIES + SCALAR_FAMILIES + POLY_FAMILIES)
    table.add_argument("--nmax", type=int, required=True)
    table.add_argument("--lambda", dest="lam", type=parse_rational, default=Fraction(0))
    table.add_argument("--r", type=int, default=None)
    _output_flags(table)

    ev = sub.add_parser("eval", help="evaluate a polynomial family at an exact point")
    ev.add_argument("family", choices=POLY_FAMILIES)
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--lambda", dest="lam", type=parse_rational, default=Fraction(0))
    ev.add_argument("--x", type=parse_rational, required=True)
    _output_flags(ev)

    ser = sub.add_parser("series", help="dump generating-function coefficients")
    ser.add_argument("selector", choices=("dexp", "dlog", "dpolylog", "hypergf"))
    ser.add_argument("--lambda", dest="lam", type=parse_rational, default=Fraction(0))
    ser.add_argument("--order", type=int, required=True)
    ser.add_argument("--k", type=int, default=1, help="polylogarithm weight (dpolylog)")
    ser.add_argument("--r", type=int, default=1, help="geometric power (hypergf)")
    ser.add_argument("--x", type=parse_rational, default=Fraction(1), help="exponent (dexp)")
    _output_flags(ser)

    check = sub.add_parser("check", help="run the identity suite")
    check.add_argument("--all", action="store_true", help="run every identity (the default)")
    check.add_argument("--id", dest="ids", action="append", help="run one identity (repeatable)")
    check.add_argument("--nmax", type=int, default=None)
    check.add_argument("--rmax", type=int, default=None)
    check.add_argument("--pmax", type=int, default=None)
    check.add_argument("--lambdas", type=_rational_list, default=None)
    check.add_argument("--order", type=int, default=None)
    check.add_argument("--tolerance", type=parse_rational, default=None)
    _output_flags(check)

    lst = sub.add_parser("list", help="list the identity registry")
    _output_flags(lst)

    return parser


def _output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    sub.add_argument("--output", default=None, help="write to a file instead of stdout")


def _emit(text: str, path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2)


def _csv_text(header: str, rows) -> str:
    return "\n".join([header] + [",".join(str(c) for c in row) for row in rows])


class DomainError(Exception):
    pass


def _table_rows(args) -> list[list]:
    family, nmax, lam, r = args.family, args.nmax, args.lam, args.r
    if nmax < 0:
        raise DomainError("--nmax must be >= 0")
    if family == "hyperharmonic":
        if r is None or r < 1:
            raise DomainError("hyperharmonic needs --r >= 1")
    elif r is not None:
        raise DomainError(f"--r does not apply to family {family!r}")
    if family in TRIANGLE_FAMILIES:
        builder = sequences.s1_triangle if family == "s1" else sequences.s2_triangle
        tri = builder(nmax, lam)
        return [list(tri.row(n)) for n in range(nmax + 1)]
    if family == "harmonic":
        return [[sequences.dharmonic(n, lam)] for n in range(nmax + 1)]
    if family == "hyperharmonic":
        return [[sequences.dhyperharmonic(n, r, lam)] for n in range(nmax + 1)]
    maker = {
        "bernoulli": sequences.dbernoulli_poly,
        "euler": sequences.deuler_poly,
        "bell": sequences.dbell_poly,
        "fubini": sequences.dfubini_poly,
    }[family]
    rows = []
    for n in range(nmax + 1):
        poly = maker(n, lam)
        rows.append([poly.coeff(i) for i in range(n + 1)])
    return rows


def _cmd_table(args) -> int:
    try:
        rows = _table_rows(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.format == "json":
        doc = {
            "family": args.family,
            "lambda": str(args.lam),
            "nmax": args.nmax,
            "values": [[str(v) for v in row] for row in rows],
        }
        if args.family == "hyperharmonic":
            doc["r"] = args.r
        text = _json_text(doc)
    elif args.format == "csv":
        flat = [(n, k, v) for n, row in enumerate(rows) for k, v in enumerate(row)]
        text = _csv_text("n,k,value", flat)
    else:
        lines = []
        for n, row in enumerate(rows):
            if args.family in TRIANGLE_FAMILIES:
                lines.append(f"{n}: " + " ".join(str(v) for v in row))
            elif args.family in SCALAR_FAMILIES:
                lines.append(f"{n}\t{row[0]}")
            else:
                lines.append(f"{n}: {Poly(row)}")
        text = "\n".join(lines)
    _emit(text, args.output)
    return EXIT_OK


def _cmd_eval(args) -> int:
    if args.n < 0:
        print("error: --n must be >= 0", file=sys.stderr)
        return EXIT_DOMAIN
    maker = {
        "bernoulli": sequences.dbernoulli_poly,
        "euler": sequences.deuler_poly,
        "bell": sequences.dbell_poly,
        "fubini": sequences.dfubini_poly,
    }[args.family]
    value = poly_eval(maker(args.n, args.lam), args.x)
    if args.format == "json":
        text = _json_text({"family": args.family, "n": args.n, "lambda": str(args.lam), "x": str(args.x), "value": str(value)})
    elif args.format == "csv":
        text = _csv_text("n,x,value", [(args.n, args.x, value)])
    else:
        text = str(value)
    _emit(text, args.output)
    return EXIT_OK


def _hypergf_series(lam, r: int, order: int) -> Series:
    minus_log = -ser_compose(dlog(lam, order), Series((0, -1), order))
    return ser_mul(minus_log, ser_reciprocal(Series((1, -1), order) ** r))


def _cmd_series(args) -> int:
    if args.order < 0:
        print("error: --order must be >= 0", file=sys.stderr)
        return EXIT_DOMAIN
    if args.selector == "dexp":
        series = dexp(args.x, args.lam, args.order)
    elif args.selector == "dlog":
        series = dlog(args.lam, args.order)
    elif args.selector == "dpolylog":
        series = dpolylog(args.k, args.lam, args.order)
    else:
        if args.r < 1:
            print("error: --r must be >= 1", file=sys.stderr)
            return EXIT_DOMAIN
        series = _hypergf_series(args.lam, args.r, args.order)
    coeffs = [str(c) for c in series.coeffs]
    if args.format == "json":
        text = _json_text({"coeffs": coeffs, "order": series.order})
    elif args.format == "csv":
        text = _csv_text("k,value", list(enumerate(coeffs)))
    else:
        text = "[" + ", ".join(coeffs) + "]"
    _emit(text, args.output)
    return EXIT_OK


def grid_from_args(args) -> Grid:
    kwargs = {}
    if args.nmax is not None:
        kwargs["nmax"] = args.nmax
    if args.rmax is not None:
        kwargs["rmax"] = args.rmax
    if args.pmax is not None:
        kwargs["pmax"] = args.pmax
    if args.lambdas is not None:
        kwargs["lambdas"] = args.lambdas
    if args.order is not None:
        kwargs["order"] = args.order
    if args.tolerance is not None:
        kwargs["e67_tol"] = args.tolerance
    return Grid(**kwargs)


def _cmd_check(args) -> int:
    ids = None if (args.all or not args.ids) else args.ids
    try:
        report = identities.run_suite(grid_from_args(args), ids=ids)
    except UnknownIdentityError as exc:
        print(f"error: unknown identity id {exc.args[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        text = _json_text(identities.suite_report_json(report))
    elif args.format == "csv":
        text = _csv_text(
            "id,pass_count,fail_count",
            [(r.id, r.pass_count, r.fail_count) for r in report.results],
        )
    else:
        lines = []
        for res in report.results:
            lines.append(f"{res.id}: pass {res.pass_count} fail {res.fail_count}")
            for failure in res.failures:
                lines.append(f"  FAIL {failure.id} at {_plain_binding(failure.binding)}")
                lines.append(f"    lhs = {failure.lhs}")
                lines.append(f"    rhs = {failure.rhs}")
                if failure.note:
                    lines.append(f"    note: {failure.note}")
        lines.append("all identities passed" if report.all_pass else "FAILURES detected")
        text = "\n".join(lines)
    _emit(text, args.output)
    return EXIT_OK if report.all_pass else EXIT_CHECK_FAILED


def _plain_binding(binding: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in binding.items())


def _cmd_list(args) -> int:
    specs = identities.list_identities()
    if args.format == "json":
        text = _json_text(
            [
                {"id": s.id, "description": s.description, "params": s.param_summary()}
                for s in specs
            ]
        )
    elif args.format == "csv":
        text = _csv_text("id,description", [(s.id, s.description) for s in specs])
    else:
        lines = []
        for s in specs:
            schema = "; ".join(f"{k}: {v}" for k, v in s.param_summary().items())
            lines.append(f"{s.id}\t{schema}\t{s.description}")
        text = "\n".join(lines)
    _emit(text, args.output)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handler = {
        "table": _cmd_table,
        "eval": _cmd_eval,
        "series": _cmd_series,
        "check": _cmd_check,
        "list": _cmd_list,
    }[args.command]
    return handler(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
