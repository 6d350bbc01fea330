"""Command-line front end: sweep, clone, verify.

Angles are given in radians; fraction literals like ``pi/4`` or ``3pi/8``
are accepted anywhere an angle is expected.  Exit codes: 0 success,
1 verification or constraint failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import re
import sys

import numpy as np

from .checks import run_checks
from .cloner import ClonerCoefficients, UnitarityError
from .ensemble import PHI_MAX, PHI_MIN
from .optimizer import numeric_optimize, optimal_coefficients, optimal_fidelity, optimal_shrinking
from .report import build_clone_report, format_clone_report

_PI_LITERAL = re.compile(
    r"^\s*([0-9]*\.?[0-9]*)\s*\*?\s*pi\s*(?:/\s*([0-9]+\.?[0-9]*))?\s*$",
    re.IGNORECASE,
)


def parse_angle(text: str) -> float:
    """Parse a radian value, accepting ``pi``-fraction literals.

    Examples: ``0.7853``, ``pi/4``, ``3pi/8``, ``0.5*pi``.
    """
    match = _PI_LITERAL.match(text)
    if match:
        coef = float(match.group(1)) if match.group(1) else 1.0
        denom = float(match.group(2)) if match.group(2) else 1.0
        if denom == 0:
            raise ValueError(f"zero denominator in angle {text!r}")
        return coef * math.pi / denom
    return float(text)


def _angle_argument(text: str) -> float:
    try:
        return parse_angle(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _coeffs_argument(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated values: a,b,c")
    try:
        a, b, c = (float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return a, b, c


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairclone",
        description="Optimal 1-to-2 cloning of two orthogonal qubit pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="tabulate optimum vs angle as CSV")
    sweep.add_argument("--phi-min", type=_angle_argument, default=0.0)
    sweep.add_argument("--phi-max", type=_angle_argument, default=math.pi / 2)
    sweep.add_argument("--steps", type=int, default=50)
    sweep.add_argument("--out", default="-", help="output path (default: stdout)")
    sweep.add_argument(
        "--with-oracle",
        action="store_true",
        help="append a grid-search fidelity column as an independent check",
    )
    sweep.add_argument("--oracle-grid", type=int, default=256)

    clone = sub.add_parser("clone", help="inspect one angle in detail")
    clone.add_argument("phi", type=_angle_argument)
    clone.add_argument(
        "--coeffs",
        type=_coeffs_argument,
        default=None,
        metavar="a,b,c",
        help="override the closed-form optimal coefficients",
    )

    verify = sub.add_parser("verify", help="run every library invariant")
    verify.add_argument("--steps", type=int, default=1000, help="phi grid size")
    verify.add_argument(
        "--tolerance",
        type=float,
        default=1e-10,
        help="bound for closed-form identities; the oracle gets 100x this",
    )
    verify.add_argument("--oracle-grid", type=int, default=256)

    return parser


def _cmd_sweep(args, parser) -> int:
    if not (PHI_MIN <= args.phi_min < args.phi_max <= PHI_MAX):
        parser.error("required: 0 <= phi-min < phi-max <= pi/2")
    if args.steps < 2:
        parser.error("--steps must be at least 2")

    header = "phi,fidelity_opt,eta_x,eta_z,a,b,c"
    if args.with_oracle:
        header += ",numeric_fidelity"
    lines = [header]
    for phi in np.linspace(args.phi_min, args.phi_max, args.steps):
        phi = float(phi)
        coeffs = optimal_coefficients(phi)
        eta_x, eta_z = optimal_shrinking(phi)
        fields = [
            _fmt(phi),
            _fmt(optimal_fidelity(phi)),
            _fmt(eta_x),
            _fmt(eta_z),
            _fmt(coeffs.a),
            _fmt(coeffs.b),
            _fmt(coeffs.c),
        ]
        if args.with_oracle:
            fields.append(_fmt(numeric_optimize(phi, grid_density=args.oracle_grid).best_fidelity))
        lines.append(",".join(fields))
    text = "\n".join(lines) + "\n"

    if args.out == "-":
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as handle:
                handle.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
        print(
            f"wrote {args.steps} rows to {args.out} "
            f"(phi from {_fmt(args.phi_min)} to {_fmt(args.phi_max)})"
        )
    return 0


def _cmd_clone(args, parser) -> int:
    if not PHI_MIN <= args.phi <= PHI_MAX:
        parser.error("phi must lie in [0, pi/2]")
    coeffs = None
    if args.coeffs is not None:
        a, b, c = args.coeffs
        try:
            coeffs = ClonerCoefficients(a=a, b=b, c=c)
        except UnitarityError as exc:
            print(f"error: coefficient override rejected: {exc}", file=sys.stderr)
            return 1
        except ValueError as exc:
            print(f"error: invalid coefficients: {exc}", file=sys.stderr)
            return 1
    report = build_clone_report(args.phi, coeffs)
    print(format_clone_report(report))
    return 0


def _cmd_verify(args, parser) -> int:
    if args.steps < 2:
        parser.error("--steps must be at least 2")
    if not args.tolerance > 0:
        parser.error("--tolerance must be positive")
    results = run_checks(
        grid=args.steps,
        tolerance=args.tolerance,
        oracle_grid=args.oracle_grid,
    )
    failures = 0
    for result in results:
        print(result.line())
        if not result.passed:
            failures += 1
    total = len(results)
    print(f"{total - failures} of {total} properties passed")
    return 0 if failures == 0 else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "sweep":
        return _cmd_sweep(args, parser)
    if args.command == "clone":
        return _cmd_clone(args, parser)
    return _cmd_verify(args, parser)


if __name__ == "__main__":
    sys.exit(main())
