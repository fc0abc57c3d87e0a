"""Command-line interface: counting, scans, spectral-identity verification,
eigenvalue and L-function evaluation, with table/CSV/JSON output."""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import ap_enumerate, lfun_special, quad_field, spectral_verify
from .ap_enumerate import (
    MaxBound,
    ProductBound,
    RatioBound,
    Rect,
    Region,
    count_region,
    default_threads,
    right_triangles,
    scan,
)

CSV_HEADER = "theorem,X,delta_or_Y,count,main_term,abs_error,rel_error,elapsed_ms"


class CliError(Exception):
    """Usage or domain error; maps to exit code 2."""


def parse_size(text: str) -> int:
    """Exact integer from '123', '1e12', or '2.5e3'; rejects non-integral values."""
    try:
        if "e" in text.lower() or "." in text:
            mantissa, _, exp = text.lower().partition("e")
            frac = Fraction(mantissa) * Fraction(10) ** int(exp or 0)
            if frac.denominator != 1:
                raise ValueError
            return int(frac)
        return int(text)
    except (ValueError, ZeroDivisionError):
        raise CliError(f"not an exact integer size: {text!r}")


def parse_delta(text: str) -> Fraction:
    """delta as a 'p/q' fraction or a decimal with at most 6 places."""
    try:
        if "/" in text:
            return Fraction(text)
        if "." in text:
            whole, _, places = text.partition(".")
            if len(places) > 6:
                raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliError(f"not a valid delta: {text!r}")


def _echo_config(config: dict[str, Any], fmt: str, out) -> None:
    if fmt == "json":
        return  # embedded in the JSON document instead
    for key in sorted(config):
        print(f"# {key} = {config[key]}", file=out)


def _emit_reports(reports, config: dict[str, Any], fmt: str, out) -> None:
    if fmt == "json":
        doc = {
            "config": config,
            "results": [
                {
                    "theorem": r.theorem,
                    "X": _region_x(r.region),
                    "delta_or_Y": _delta_or_y(r.region),
                    "count": r.count,
                    "main_term": r.main_term,
                    "abs_error": r.abs_error,
                    "rel_error": r.rel_error,
                    "elapsed_ms": r.elapsed * 1000.0,
                }
                for r in reports
            ],
        }
        json.dump(doc, out, indent=2)
        out.write("\n")
        return
    _echo_config(config, fmt, out)
    if fmt == "csv":
        print(CSV_HEADER, file=out)
        for r in reports:
            print(
                f"{r.theorem},{_region_x(r.region)},{_delta_or_y(r.region)},"
                f"{r.count},{r.main_term:.6f},{r.abs_error:.6f},"
                f"{r.rel_error:.6e},{r.elapsed * 1000.0:.3f}",
                file=out,
            )
        return
    print(
        f"{'theorem':<12}{'X':>16}{'delta_or_Y':>14}{'count':>14}"
        f"{'main_term':>18}{'rel_error':>12}{'ms':>10}",
        file=out,
    )
    for r in reports:
        print(
            f"{r.theorem:<12}{_region_x(r.region):>16}{_delta_or_y(r.region):>14}"
            f"{r.count:>14}{r.main_term:>18.4f}{r.rel_error:>12.3e}"
            f"{r.elapsed * 1000.0:>10.1f}",
            file=out,
        )


def _region_x(region: Region) -> int:
    return region.x


def _delta_or_y(region: Region) -> str:
    if isinstance(region, RatioBound):
        return str(region.delta)
    if isinstance(region, Rect):
        return str(region.y)
    return ""


def _build_region(args) -> Region:
    x = parse_size(args.x)
    if args.region == "ratio":
        return RatioBound(x, parse_delta(args.delta) if args.delta else Fraction(1))
    if args.region == "max":
        return MaxBound(x)
    if args.region == "rect":
        if args.y is None:
            raise CliError("--y is required for the rect region")
        return Rect(x, parse_size(args.y))
    if args.region == "product":
        return ProductBound(x)
    raise CliError(f"unknown region {args.region!r}")


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apsq",
        description="Primitive APs of squares: counts, scans, and spectral identity checks.",
    )
    parser.add_argument("--format", choices=("table", "csv", "json"), default="table")
    parser.add_argument("--output", default=None, help="output path (default stdout)")
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker threads for scans (default APSQ_THREADS or 1)",
    )
    # same options accepted after the subcommand; SUPPRESS keeps the
    # top-level value unless the subcommand form is given
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("table", "csv", "json"), default=argparse.SUPPRESS
    )
    common.add_argument("--output", default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="exact count over one region")
    p.add_argument("--region", choices=("ratio", "max", "rect", "product"), required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y")
    p.add_argument("--delta")
    trivial = p.add_mutually_exclusive_group()
    trivial.add_argument("--include-trivial", dest="include_trivial", action="store_true", default=True)
    trivial.add_argument("--no-trivial", dest="include_trivial", action="store_false")

    p = sub.add_parser("scan", parents=[common], help="counts vs. main terms over a size grid")
    p.add_argument(
        "--theorem",
        choices=("ratio", "max", "rect", "product", "ratl-points"),
        required=True,
    )
    p.add_argument("--grid", required=True, help="comma-separated sizes, e.g. 1e8,1e10")
    p.add_argument("--delta")
    p.add_argument("--y-exponent", type=float, default=0.75)
    trivial = p.add_mutually_exclusive_group()
    trivial.add_argument("--include-trivial", dest="include_trivial", action="store_true", default=True)
    trivial.add_argument("--no-trivial", dest="include_trivial", action="store_false")

    p = sub.add_parser("verify-single", parents=[common], help="single-series spectral identity at (h, s)")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--b-max", type=int, default=None)
    p.add_argument("--m-max", type=int, default=16)

    p = sub.add_parser("verify-double", parents=[common], help="double-series spectral identity at (s, w)")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--w", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-5)
    p.add_argument("--h-max", type=int, default=10**6)
    p.add_argument("--m-max", type=int, default=12)
    p.add_argument("--prime-bound", type=int, default=10**6)

    p = sub.add_parser("eigen", parents=[common], help="dihedral Hecke eigenvalue lambda_m(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("lfun", parents=[common], help="evaluate an L-function or zeta factor")
    p.add_argument(
        "--which", choices=("chi8", "chi4", "principal8", "hecke", "zeta2"), required=True
    )
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--m2", type=int, default=0, help="even character power for hecke")
    p.add_argument("--prime-bound", type=int, default=10**6)

    p = sub.add_parser("points", parents=[common], help="rational points on x^2+y^2=2 with denominator <= sqrt(X)")
    p.add_argument("--x", required=True)

    p = sub.add_parser("triangles", parents=[common], help="near-isosceles primitive right triangles")
    p.add_argument("--x", required=True)
    p.add_argument("--omega", type=float, required=True)

    return parser


def _resolved_config(args) -> dict[str, Any]:
    config = {k: v for k, v in vars(args).items() if v is not None}
    config["threads"] = args.threads
    return config


def _print_identity(report, config, fmt, out) -> None:
    if fmt == "json":
        doc = {"config": config, "result": asdict(report)}
        json.dump(doc, out, indent=2)
        out.write("\n")
        return
    _echo_config(config, fmt, out)
    status = "PASS" if report.passed else "FAIL"
    print(
        f"{status} lhs={report.lhs:.12g} rhs={report.rhs:.12g} "
        f"rel_diff={report.rel_diff:.3e} tol={report.tolerance:g}",
        file=out,
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.threads is None:
        args.threads = default_threads()
    config = _resolved_config(args)

    out = sys.stdout
    close_out = False
    try:
        if args.output:
            out = open(args.output, "w")
            close_out = True
        return _dispatch(args, config, out)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if close_out:
            out.close()


def _dispatch(args, config: dict[str, Any], out) -> int:
    fmt = args.format
    if args.command == "count":
        region = _build_region(args)
        count = count_region(region, args.include_trivial, threads=args.threads)
        if fmt == "json":
            json.dump({"config": config, "count": count}, out, indent=2)
            out.write("\n")
        else:
            _echo_config(config, fmt, out)
            print(count, file=out)
        return 0

    if args.command == "scan":
        grid = [parse_size(part) for part in args.grid.split(",")]
        delta = parse_delta(args.delta) if args.delta else None
        reports = scan(
            args.theorem,
            grid,
            delta=delta,
            y_exponent=args.y_exponent,
            include_trivial=args.include_trivial,
            threads=args.threads,
        )
        _emit_reports(reports, config, fmt, out)
        return 0

    if args.command == "verify-single":
        report = spectral_verify.verify_single(
            args.h, args.s, rel_tol=args.tol, b_max=args.b_max, m_max=args.m_max
        )
        _print_identity(report, config, fmt, out)
        return 0 if report.passed else 1

    if args.command == "verify-double":
        report = spectral_verify.verify_double(
            args.s,
            args.w,
            rel_tol=args.tol,
            h_max=args.h_max,
            m_max=args.m_max,
            prime_bound=args.prime_bound,
        )
        _print_identity(report, config, fmt, out)
        return 0 if report.passed else 1

    if args.command == "eigen":
        value = quad_field.lambda_n(args.n, args.m) + 0.0
        _echo_config(config, fmt, out)
        print(f"lambda_{args.m}({args.n}) = {value:.12g}", file=out)
        return 0

    if args.command == "lfun":
        if args.which == "hecke":
            sv = lfun_special.hecke_L(args.s, args.m2, args.prime_bound)
            value, tail = sv.value, sv.tail_estimate
        elif args.which == "zeta2":
            value, tail = lfun_special.zeta2_factor(args.s), 0.0
        else:
            sv = lfun_special.dirichlet_L(args.s, args.which)
            value, tail = sv.value, sv.tail_estimate
        _echo_config(config, fmt, out)
        print(f"{args.which}(s={args.s:g}) = {value:.14g} (tail <= {tail:.2e})", file=out)
        return 0

    if args.command == "points":
        x = parse_size(args.x)
        total = ap_enumerate.rational_point_sum(x, threads=args.threads)
        main = 4.0 / math.pi * math.sqrt(x)
        _echo_config(config, fmt, out)
        print(f"{total} (main term {main:.2f})", file=out)
        return 0

    if args.command == "triangles":
        x = parse_size(args.x)
        rep = right_triangles(x, args.omega, threads=args.threads)
        _echo_config(config, fmt, out)
        print(
            f"{rep.count} (main term {rep.main_term:.2f}, rel error {rep.rel_error:.3e})",
            file=out,
        )
        return 0

    raise CliError(f"unknown command {args.command!r}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
