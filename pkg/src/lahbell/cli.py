"""Command-line frontend: number tables, polynomial listings, identity
verification, and seeded simulation, in machine-readable csv or json.

Exit codes: 0 success, 1 identity failure, 2 usage, 3 table cap exceeded,
4 evaluation domain error, 5 signed mass.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .distributions import (
    DegenerateBinomial,
    DegeneratePoisson,
    MomentKind,
)
from .errors import (
    ConvergenceError,
    DomainError,
    EvaluationError,
    SignedMassError,
    TailError,
)
from .exact_core import (
    LAH_TRIANGLE,
    STIRLING1_TRIANGLE,
    STIRLING2_TRIANGLE,
    format_rational,
)
from .montecarlo import SUITES, SamplerStream, estimate_moment, run_suite
from .polynomials import (
    bell_polynomial,
    degenerate_bell_polynomial,
    degenerate_lah_bell_polynomial,
    evaluate_degenerate,
    lah_bell_number,
    lah_bell_polynomial,
)

TABLE_CAP_DEFAULT = 200

_TRIANGLES = {
    "lah": LAH_TRIANGLE,
    "s1": STIRLING1_TRIANGLE,
    "s2": STIRLING2_TRIANGLE,
}


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def cmd_table(args: argparse.Namespace) -> int:
    if args.n_max < 0:
        return _fail("--n-max must be nonnegative", 2)
    if args.n_max > args.cap:
        return _fail(f"--n-max {args.n_max} exceeds the cap {args.cap}", 3)
    if args.kind == "lahbell-numbers":
        sequence = [lah_bell_number(n) for n in range(args.n_max + 1)]
        if args.format == "json":
            _emit(json.dumps(sequence))
        else:
            _emit(",".join(str(v) for v in sequence))
        return 0
    triangle = _TRIANGLES[args.kind]
    rows = [list(triangle.row(n)) for n in range(args.n_max + 1)]
    if args.format == "json":
        _emit(json.dumps(rows))
    else:
        for row in rows:
            _emit(",".join(str(v) for v in row))
    return 0


def cmd_poly(args: argparse.Namespace) -> int:
    degenerate = args.family in ("dbell", "dlahbell")
    if degenerate and args.lam is None:
        return _fail(f"--lambda is required for family {args.family}", 2)
    if args.n < 0:
        return _fail("--n must be nonnegative", 2)
    if args.family == "bell":
        poly = bell_polynomial(args.n)
    elif args.family == "lahbell":
        poly = lah_bell_polynomial(args.n)
    elif args.family == "dbell":
        poly = degenerate_bell_polynomial(args.n, args.lam)
    else:
        poly = degenerate_lah_bell_polynomial(args.n, args.lam)

    value = None
    if args.eval_at is not None:
        if poly.variable == "y":
            value = evaluate_degenerate(poly, args.eval_at, args.lam)
        else:
            value = poly.evaluate(args.eval_at)

    coefficients = [format_rational(c) for c in poly.coefficients]
    if args.format == "json":
        out = {"family": args.family, "n": args.n, "variable": poly.variable,
               "coefficients": coefficients}
        if degenerate:
            out["lambda"] = format_rational(args.lam)
        if args.eval_at is not None:
            out["eval_at"] = format_rational(args.eval_at)
            out["value"] = format_rational(value)
        _emit(json.dumps(out))
    else:
        _emit(",".join([poly.variable] + coefficients))
        if args.eval_at is not None:
            _emit(f"value,{format_rational(value)}")
    return 0


_REPORT_CSV_FIELDS = ("identity", "mode", "status", "lhs", "rhs", "discrepancy", "seed", "samples")


def _report_csv_line(report) -> str:
    data = report.to_dict()
    cells = [str(data.get(field, "")) for field in _REPORT_CSV_FIELDS]
    cells.append(";".join(f"{k}={v}" for k, v in data["params"].items()))
    return ",".join(cells)


def cmd_verify(args: argparse.Namespace) -> int:
    if args.trials < 2:
        return _fail("--trials must be at least 2", 2)
    reports = run_suite(
        args.suite,
        n_max=args.n_max,
        seed=args.seed,
        trials=args.trials,
        z_threshold=args.z_threshold,
    )
    if args.format == "json":
        for report in reports:
            _emit(report.to_json())
    else:
        _emit(",".join(_REPORT_CSV_FIELDS + ("params",)))
        for report in reports:
            _emit(_report_csv_line(report))
    return 1 if any(r.status == "FAIL" for r in reports) else 0


def _build_distribution(args: argparse.Namespace):
    if args.dist in ("poisson", "dpoisson"):
        if args.alpha is None:
            raise DomainError("--alpha is required for Poisson-type distributions")
        lam = Fraction(0) if args.dist == "poisson" else (args.lam if args.lam is not None else Fraction(0))
        return DegeneratePoisson(args.alpha, lam)
    if args.p is None or args.n is None:
        raise DomainError("--n and --p are required for binomial-type distributions")
    lam = Fraction(0) if args.dist == "binomial" else (args.lam if args.lam is not None else Fraction(0))
    return DegenerateBinomial(args.n, args.p, lam)


def _simulation_target(d, kind: MomentKind, order: int):
    if kind is MomentKind.RAW:
        return d.raw_moment(order)
    if kind is MomentKind.FALLING:
        return d.falling_factorial_moment(order)
    return d.rising_factorial_moment(order)


def cmd_simulate(args: argparse.Namespace) -> int:
    try:
        dist = _build_distribution(args)
    except DomainError as exc:
        return _fail(str(exc), 2)
    if args.samples < 2:
        return _fail("--samples must be at least 2", 2)
    kind = MomentKind(args.moment)
    estimate = estimate_moment(dist, kind, args.order, args.samples, SamplerStream(args.seed, 0))
    target = _simulation_target(dist, kind, args.order)
    target_str = format_rational(target) if isinstance(target, Fraction) else repr(float(target))
    if estimate.standard_error == 0:
        z = 0.0 if estimate.estimate == float(target) else float("inf")
    else:
        z = (estimate.estimate - float(target)) / estimate.standard_error

    params = {}
    if isinstance(dist, DegeneratePoisson):
        params["alpha"] = format_rational(dist.alpha)
        params["lambda"] = format_rational(dist.lam)
    else:
        params["n"] = str(dist.n)
        params["p"] = format_rational(dist.p)
        params["lambda"] = format_rational(dist.lam)

    if args.format == "json":
        _emit(json.dumps({
            "distribution": args.dist,
            "params": params,
            "moment": kind.value,
            "order": args.order,
            "samples": args.samples,
            "seed": args.seed,
            "estimate": estimate.estimate,
            "standard_error": estimate.standard_error,
            "target": target_str,
            "z": z,
        }))
    else:
        _emit("distribution,moment,order,samples,seed,estimate,standard_error,target,z")
        _emit(",".join([
            args.dist, kind.value, str(args.order), str(args.samples), str(args.seed),
            repr(estimate.estimate), repr(estimate.standard_error), target_str, repr(z),
        ]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lahbell",
        description="Exact Lah-Bell / degenerate Lah-Bell machinery with identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print a number triangle or sequence")
    table.add_argument("kind", choices=["lah", "s1", "s2", "lahbell-numbers"])
    table.add_argument("--n-max", type=int, required=True)
    table.add_argument("--cap", type=int, default=TABLE_CAP_DEFAULT)
    table.add_argument("--format", choices=["csv", "json"], default="json")
    table.set_defaults(func=cmd_table)

    poly = sub.add_parser("poly", help="print a polynomial family member")
    poly.add_argument("family", choices=["bell", "lahbell", "dbell", "dlahbell"])
    poly.add_argument("--n", type=int, required=True)
    poly.add_argument("--lambda", dest="lam", type=_rational, default=None)
    poly.add_argument("--eval-at", dest="eval_at", type=_rational, default=None)
    poly.add_argument("--format", choices=["csv", "json"], default="json")
    poly.set_defaults(func=cmd_poly)

    verify = sub.add_parser("verify", help="run a registered identity suite")
    verify.add_argument("suite", choices=["all", *SUITES])
    verify.add_argument("--n-max", type=int, default=12)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--trials", type=int, default=100_000)
    verify.add_argument("--z-threshold", type=float, default=5.0)
    verify.add_argument("--format", choices=["csv", "json"], default="json")
    verify.set_defaults(func=cmd_verify)

    simulate = sub.add_parser("simulate", help="estimate a moment by seeded sampling")
    simulate.add_argument("--dist", choices=["poisson", "binomial", "dpoisson", "dbinomial"], required=True)
    simulate.add_argument("--alpha", type=_rational, default=None)
    simulate.add_argument("--p", type=_rational, default=None)
    simulate.add_argument("--n", type=int, default=None)
    simulate.add_argument("--lambda", dest="lam", type=_rational, default=None)
    simulate.add_argument("--moment", choices=[k.value for k in MomentKind], default="raw")
    simulate.add_argument("--order", type=int, default=1)
    simulate.add_argument("--samples", type=int, default=100_000)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--format", choices=["csv", "json"], default="json")
    simulate.set_defaults(func=cmd_simulate)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SignedMassError as exc:
        return _fail(str(exc), 5)
    except (EvaluationError, DomainError, ConvergenceError, TailError) as exc:
        return _fail(str(exc), 4)
    except ValueError as exc:
        return _fail(str(exc), 2)


if __name__ == "__main__":
    sys.exit(main())
