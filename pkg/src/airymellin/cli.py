"""Command-line interface: ``airymellin {eval,table,verify}``.

Exit codes: 0 success, 1 a verify check failed, 2 domain/usage error,
3 convergence failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import asdict, dataclass, fields
from fractions import Fraction

from .airy import ProductKind, quartic_product
from .errors import AiryOverflowError, ConvergenceError, DomainError
from .mellin import (
    Method,
    mellin,
    mellin_halfinteger,
    mellin_integer,
)
from .quadrature import DEFAULT_TOL, moment_quadrature
from .verification import SUITES, run_suite

TOL_ENV = "AIRYMELLIN_TOL"
FAMILIES = ("3m+1", "3m+2", "3m+3", "3m+5/2")
M_MAX_LIMIT = 50

EXIT_OK, EXIT_VERIFY, EXIT_DOMAIN, EXIT_CONVERGENCE = 0, 1, 2, 3


@dataclass
class OutputRecord:
    kind: str
    alpha: float
    c: float
    value: float
    abs_error_estimate: float
    method: str
    closed_form: str | None = None
    oracle_value: float | None = None
    residual: float | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls(**json.loads(text))


FIELDS = [f.name for f in fields(OutputRecord)]


def _exact_form(kind: ProductKind, alpha: float):
    """(ClosedForm, Method) when alpha has one at c = 0, else (None, None)."""
    if kind is ProductKind.AI2BI2:
        return None, None
    if alpha == int(alpha):
        return mellin_integer(kind, int(alpha)), Method.INTEGER_FORM
    m, r = divmod(alpha - 2.5, 3)
    if r == 0 and m >= 0:
        return mellin_halfinteger(kind, int(m)), Method.HALF_INTEGER_FORM
    return None, None


def evaluate_point(kind, alpha: float, c: float, exact: bool = False, oracle: bool = False,
                   tol: float = DEFAULT_TOL) -> OutputRecord:
    kind = ProductKind(kind)
    res = mellin(kind, alpha, c)
    for w in res.warnings:
        print(f"warning: {w}", file=sys.stderr)
    rec = OutputRecord(kind.value, float(alpha), float(c), res.value, res.abs_error_estimate, res.method.value)
    if exact and c == 0:
        form, method = _exact_form(kind, float(alpha))
        if form is not None:
            rec.closed_form = form.render()
            rec.value = form.evaluate()
            rec.abs_error_estimate = 4 * math.ulp(abs(rec.value))
            rec.method = method.value
    if oracle:
        q = moment_quadrature(kind, alpha, c, tol)
        rec.oracle_value = q.value
        rec.residual = abs(rec.value - q.value)
    return rec


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise DomainError(f"{TOL_ENV}={raw!r} is not a number")


def _dump_integrand(path: str, kind: ProductKind, alphas, c: float, x_max: float, points: int) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["alpha", "x", "integrand"])
        for alpha in alphas:
            for i in range(points):
                x = x_max * i / (points - 1)
                weight = x ** (alpha - 1) if x > 0 else (1.0 if alpha == 1 else (0.0 if alpha > 1 else math.inf))
                w.writerow([repr(alpha), repr(x), repr(weight * quartic_product(c + x, kind))])


def cmd_eval(args) -> int:
    tol = args.tol if args.tol is not None else _default_tol()
    kind = ProductKind(args.kind)
    records = [evaluate_point(kind, a, args.c, args.exact, args.oracle, tol) for a in args.alpha]
    if args.dump_integrand:
        _dump_integrand(args.dump_integrand, kind, args.alpha, args.c, args.x_max, args.points)
    if args.csv:
        w = csv.DictWriter(sys.stdout, fieldnames=FIELDS, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow({k: ("" if v is None else repr(v) if isinstance(v, float) else v) for k, v in asdict(r).items()})
    elif args.json:
        for r in records:
            print(r.to_json())
    else:
        for r in records:
            line = f"{r.kind} alpha={r.alpha:g} c={r.c:g}  {r.value:.16g}  (+/- {r.abs_error_estimate:.1e}, {r.method})"
            if r.closed_form:
                line += f"\n    = {r.closed_form}"
            if r.oracle_value is not None:
                line += f"\n    quadrature {r.oracle_value:.16g}, residual {r.residual:.2e}"
            print(line)
    return EXIT_OK


def _table_rows(family: str, kind: ProductKind, m_max: int):
    for m in range(m_max + 1):
        if family == "3m+5/2":
            alpha = Fraction(6 * m + 5, 2)
            form = mellin_halfinteger(kind, m)
        else:
            alpha = Fraction(3 * m + int(family[-1]))
            form = mellin_integer(kind, int(alpha))
        yield {"m": m, "alpha": str(alpha), "closed_form": form.render(),
               "exact": form.exact_repr(), "value": form.evaluate()}


def cmd_table(args) -> int:
    if not 0 <= args.m_max <= M_MAX_LIMIT:
        raise DomainError(f"--m-max must lie in [0, {M_MAX_LIMIT}]")
    kind = ProductKind(args.kind)
    if kind is ProductKind.AI2BI2:
        raise DomainError("closed-form tables exist for ai4 and ai3bi only")
    rows = list(_table_rows(args.family, kind, args.m_max))
    if args.format == "json":
        for r in rows:
            print(json.dumps(r, ensure_ascii=False))
    else:
        w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({**r, "value": repr(r["value"])})
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, args.tol_scale, args.jobs)
    failed = 0
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        failed += not c.passed
        print(f"{status}  {c.suite:<11} {c.name:<58} residual={c.residual:.3e}  threshold={c.threshold:.1e}")
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_DOMAIN)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="airymellin", description="Mellin transforms of quartic Airy products.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate moments at one or more alpha")
    e.add_argument("--kind", required=True, choices=[k.value for k in ProductKind])
    e.add_argument("--alpha", required=True, type=float, action="append", help="repeatable")
    e.add_argument("--c", type=float, default=0.0, help="shift (default 0)")
    out = e.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="one JSON object per line")
    out.add_argument("--csv", action="store_true", help="CSV with a header row")
    e.add_argument("--exact", action="store_true", help="closed form when alpha has one (c = 0)")
    e.add_argument("--oracle", action="store_true", help="cross-check by direct quadrature")
    e.add_argument("--tol", type=float, default=None,
                   help=f"relative quadrature tolerance (default ${TOL_ENV} or {DEFAULT_TOL:g})")
    e.add_argument("--dump-integrand", metavar="FILE", help="write x, x^(alpha-1) P(c+x) samples as CSV")
    e.add_argument("--x-max", type=float, default=6.0, help="range for --dump-integrand")
    e.add_argument("--points", type=int, default=241, help="samples for --dump-integrand")
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("table", help="closed forms along one alpha family")
    t.add_argument("--family", required=True, choices=FAMILIES)
    t.add_argument("--kind", default="ai4", choices=["ai4", "ai3bi"])
    t.add_argument("--m-max", type=int, default=5)
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run the self-check suites")
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.add_argument("--tol-scale", type=float, default=1.0, help="multiply every threshold")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, AiryOverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
