"""Command-line front end.

Every command builds an OutputRecord (inputs echoed, results keyed, one
error-budget entry per result) and emits it as JSON or CSV to stdout or
to --out.  Human-oriented tables go to stderr so machine output stays
clean.  Exit codes: 0 success, 1 computational failure or failed
comparison, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys

from .errors import ZetaFieldError
from .experiment import run_experiment
from .figures import figure_series
from .output import (
    OutputRecord,
    figure_to_csv,
    format_float,
    record_to_csv,
    record_to_json,
    write_text,
)
from .potentials import electric_field, phi1_report, phi2_report, phi_report, remark_potential
from .symmetry import alpha_from_alpha_prime, solve_alpha_prime, sweep_symmetry
from .validate import SUITE_NAMES, run_suite
from .zeta import EvalOptions, zeta
from .zeros import ZeroOrdinates

_THETA_MAX_DEFAULT = 0.999 * (math.pi / 2.0)


def _add_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default="json")
    sub.add_argument("--out", metavar="PATH", default=None)


def _add_quadrature_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--t-max", type=float, default=1000.0)
    sub.add_argument("--tol", type=float, default=1e-8)
    sub.add_argument("--zeros", metavar="PATH", default=None)
    sub.add_argument("--workers", type=int, default=1)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetafield",
        description="Lorentz-weighted potentials of log |zeta| and the "
        "equal-potential pairing across the critical strip.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("eval", help="evaluate zeta at one point")
    p.add_argument("--rho", type=float, required=True, help="real part of s")
    p.add_argument("--t", type=float, default=0.0, help="imaginary part of s")
    p.add_argument("--tol", type=float, default=1e-12)
    _add_output_flags(p)

    p = commands.add_parser(
        "potential", help="Lorentz mean of log |zeta| vs its closed form"
    )
    p.add_argument("--rho", type=float, required=True)
    p.add_argument(
        "--rho0", type=float, default=None, help="scale; defaults to rho0 = rho"
    )
    _add_quadrature_flags(p)
    _add_output_flags(p)

    for name, blurb in (
        ("phi1", "plain-kernel potential of log |zeta(s)(s-1)|"),
        ("phi2", "squared-kernel potential of log |zeta(s)(s-1)|"),
    ):
        p = commands.add_parser(name, help=blurb)
        p.add_argument("--alpha", type=float, required=True)
        _add_quadrature_flags(p)
        _add_output_flags(p)

    p = commands.add_parser("field", help="closed-form field value")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--variant", choices=("d_alpha", "d_rho"), default="d_alpha")
    _add_output_flags(p)

    p = commands.add_parser(
        "solve", help="equal-potential pairing: solve, invert, or sweep"
    )
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--alpha-prime", type=float, default=None)
    p.add_argument(
        "--method",
        choices=("direct", "euler_product", "mobius_sum"),
        default="direct",
        help="inversion method when --alpha-prime is given",
    )
    p.add_argument("--grid", metavar="START:STOP:STEP", default=None)
    p.add_argument("--theta-max", type=float, default=_THETA_MAX_DEFAULT)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--zeros", metavar="PATH", default=None)
    p.add_argument("--workers", type=int, default=1)
    _add_output_flags(p)

    p = commands.add_parser("experiment", help="reproduce the reference scenario")
    p.add_argument("--theta-max", type=float, default=_THETA_MAX_DEFAULT)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--zeros", metavar="PATH", default=None)
    p.add_argument("--workers", type=int, default=1)
    _add_output_flags(p)

    p = commands.add_parser("figure", help="emit sampled figure data")
    p.add_argument("--id", type=int, required=True, dest="figure_id")
    p.add_argument("--resolution", type=int, default=512)
    p.add_argument("--theta-max", type=float, default=_THETA_MAX_DEFAULT)
    p.add_argument("--out", metavar="PATH", default=None)

    p = commands.add_parser("validate", help="run a self-check suite")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.add_argument("--workers", type=int, default=1)
    _add_output_flags(p)

    return parser


def _parse_grid(spec: str, parser: argparse.ArgumentParser) -> list[float]:
    parts = spec.split(":")
    if len(parts) != 3:
        parser.error(f"--grid expects START:STOP:STEP, got {spec!r}")
    try:
        start, stop, step = (float(v) for v in parts)
    except ValueError:
        parser.error(f"--grid components must be numbers, got {spec!r}")
    if step <= 0.0 or stop < start:
        parser.error("--grid needs step > 0 and stop >= start")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + k * step for k in range(count)]


def _load_zeros(path: str | None) -> ZeroOrdinates | None:
    return ZeroOrdinates.from_file(path) if path else None


def _emit(record: OutputRecord, fmt: str, out: str | None) -> None:
    text = record_to_json(record) if fmt == "json" else record_to_csv(record)
    if out:
        write_text(out, text)
    else:
        sys.stdout.write(text)


def _cmd_eval(args) -> tuple[OutputRecord, int]:
    opts = EvalOptions(abs_tol=args.tol)
    value = zeta(complex(args.rho, args.t), opts)
    modulus = abs(value)
    record = OutputRecord(
        command="eval",
        inputs={"rho": args.rho, "t": args.t, "tol": args.tol},
        results={
            "real": value.real,
            "imag": value.imag,
            "abs": modulus,
            "log_abs": math.log(modulus) if modulus > 0.0 else -math.inf,
        },
        error_budget={
            "real": args.tol,
            "imag": args.tol,
            "abs": args.tol,
            "log_abs": args.tol / modulus if modulus > 0.0 else math.inf,
        },
    )
    return record, 0


def _potential_record(command: str, inputs: dict, report) -> OutputRecord:
    total = report.quadrature.total_error
    return OutputRecord(
        command=command,
        inputs=inputs,
        results={
            "numeric": report.numeric,
            "closed": report.closed,
            "residual": report.residual,
            "error_estimate": report.quadrature.error_estimate,
            "tail_estimate": report.quadrature.tail_estimate,
            "panels": report.quadrature.panels,
            "truncation_t": report.quadrature.truncation_t,
        },
        error_budget={
            "numeric": total,
            "closed": "exact",
            "residual": total,
            "error_estimate": "exact",
            "tail_estimate": "exact",
            "panels": "exact",
            "truncation_t": "exact",
        },
    )


def _cmd_potential(args) -> tuple[OutputRecord, int]:
    zeros = _load_zeros(args.zeros)
    common = dict(t_max=args.t_max, tol=args.tol, zeros=zeros, workers=args.workers)
    if args.rho0 is None:
        report = remark_potential(args.rho, **common)
        inputs = {"rho": args.rho, "t_max": args.t_max, "tol": args.tol}
    else:
        report = phi_report(args.rho, args.rho0, **common)
        inputs = {"rho": args.rho, "rho0": args.rho0, "t_max": args.t_max, "tol": args.tol}
    return _potential_record("potential", inputs, report), 0


def _cmd_phi(args, which: str) -> tuple[OutputRecord, int]:
    zeros = _load_zeros(args.zeros)
    fn = phi1_report if which == "phi1" else phi2_report
    report = fn(
        args.alpha, t_max=args.t_max, tol=args.tol, zeros=zeros, workers=args.workers
    )
    inputs = {"alpha": args.alpha, "t_max": args.t_max, "tol": args.tol}
    return _potential_record(which, inputs, report), 0


def _cmd_field(args) -> tuple[OutputRecord, int]:
    value = electric_field(args.alpha, args.variant)
    record = OutputRecord(
        command="field",
        inputs={"alpha": args.alpha, "variant": args.variant},
        results={"value": value},
        error_budget={"value": "exact"},
    )
    return record, 0


def _cmd_solve(args, parser: argparse.ArgumentParser) -> tuple[OutputRecord, int]:
    given = [args.alpha is not None, args.alpha_prime is not None, args.grid is not None]
    if sum(given) != 1:
        parser.error("solve needs exactly one of --alpha, --alpha-prime, --grid")

    if args.grid is not None:
        grid = _parse_grid(args.grid, parser)
        zeros = _load_zeros(args.zeros)
        points = sweep_symmetry(
            grid,
            theta_max=args.theta_max,
            solver_tol=args.tol,
            zeros=zeros,
            workers=args.workers,
        )
        results: dict = {}
        budget: dict = {}
        failed = False
        for point in points:
            key = format_float(point.alpha)
            if point.error is not None:
                results[f"error@{key}"] = point.error
                budget[f"error@{key}"] = "exact"
                failed = True
                continue
            results[f"alpha_prime@{key}"] = point.pair.alpha_prime
            budget[f"alpha_prime@{key}"] = args.tol
            results[f"difference@{key}"] = point.residual.difference
            budget[f"difference@{key}"] = point.residual.combined_error
        record = OutputRecord(
            command="solve",
            inputs={"grid": args.grid, "theta_max": args.theta_max, "tol": args.tol},
            results=results,
            error_budget=budget,
        )
        return record, 1 if failed else 0

    if args.alpha is not None:
        pair = solve_alpha_prime(args.alpha, tol=args.tol)
        record = OutputRecord(
            command="solve",
            inputs={"alpha": args.alpha, "tol": args.tol},
            results={
                "alpha_prime": pair.alpha_prime,
                "two_alpha_prime": 2.0 * pair.alpha_prime,
                "potential": pair.potential,
                "rho_inside": pair.rho_inside,
                "rho_outside": pair.rho_outside,
                "rho0": pair.rho0,
            },
            error_budget={
                "alpha_prime": args.tol,
                "two_alpha_prime": 2.0 * args.tol,
                "potential": "exact",
                "rho_inside": "exact",
                "rho_outside": 2.0 * args.tol,
                "rho0": "exact",
            },
        )
        return record, 0

    estimate = alpha_from_alpha_prime(args.alpha_prime, args.method)
    record = OutputRecord(
        command="solve",
        inputs={"alpha_prime": args.alpha_prime, "method": args.method},
        results={"alpha": estimate.alpha, "tail_bound": estimate.tail_bound},
        error_budget={"alpha": estimate.tail_bound + 1e-12, "tail_bound": "exact"},
    )
    return record, 0


def _cmd_experiment(args) -> tuple[OutputRecord, int]:
    zeros = _load_zeros(args.zeros)
    result = run_experiment(
        theta_max=args.theta_max, tol=args.tol, zeros=zeros, workers=args.workers
    )

    print(f"{'quantity':<18} {'computed':>18} {'reference':>12} {'tol':>8}  status", file=sys.stderr)
    for row in result.rows:
        status = "ok" if row.passed else "FAIL"
        print(
            f"{row.name:<18} {row.computed:>18.10f} {row.reference:>12g} "
            f"{row.tolerance:>8g}  {status}",
            file=sys.stderr,
        )

    pair, residual = result.pair, result.residual
    record = OutputRecord(
        command="experiment",
        inputs={"theta_max": args.theta_max, "tol": args.tol},
        results={
            "alpha": pair.alpha,
            "alpha_prime": pair.alpha_prime,
            "two_alpha_prime": 2.0 * pair.alpha_prime,
            "rho_inside": pair.rho_inside,
            "rho_outside": pair.rho_outside,
            "height": result.height,
            "integral_inside": residual.inside.value,
            "integral_outside": residual.outside.value,
            "difference": residual.difference,
        },
        error_budget={
            "alpha": "exact",
            "alpha_prime": 1e-10,
            "two_alpha_prime": 2e-10,
            "rho_inside": "exact",
            "rho_outside": 2e-10,
            "height": "exact",
            "integral_inside": residual.inside.total_error,
            "integral_outside": residual.outside.total_error,
            "difference": residual.combined_error,
        },
    )
    return record, 0 if result.passed else 1


def _cmd_figure(args, parser: argparse.ArgumentParser) -> int:
    if args.resolution < 16:
        parser.error("--resolution must be at least 16")
    figure = figure_series(
        args.figure_id, resolution=args.resolution, theta_max=args.theta_max
    )
    csv_text = figure_to_csv(figure)
    if args.out is None:
        sys.stdout.write(csv_text)
        return 0

    write_text(args.out, csv_text)
    png_path = args.out[:-4] + ".png" if args.out.endswith(".csv") else args.out + ".png"
    from . import plotting

    plotting.render_figure(figure, png_path)
    record = OutputRecord(
        command="figure",
        inputs={"id": args.figure_id, "resolution": args.resolution},
        results={
            "series": len(figure.series),
            "rows": sum(len(s.x) for s in figure.series),
            "csv": args.out,
            "png": png_path,
        },
        error_budget={"series": "exact", "rows": "exact", "csv": "exact", "png": "exact"},
    )
    sys.stdout.write(record_to_json(record))
    return 0


def _cmd_validate(args) -> tuple[OutputRecord, int]:
    checks = run_suite(args.suite, workers=args.workers)
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        print(
            f"{status} {check.name}: observed {check.observed:.6e}, "
            f"allowed {check.allowed:.6e}",
            file=sys.stderr,
        )
    record = OutputRecord(
        command="validate",
        inputs={"suite": args.suite},
        results={check.name: check.observed for check in checks},
        error_budget={check.name: check.allowed for check in checks},
    )
    return record, 0 if all(check.passed for check in checks) else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            record, code = _cmd_eval(args)
        elif args.command == "potential":
            record, code = _cmd_potential(args)
        elif args.command in ("phi1", "phi2"):
            record, code = _cmd_phi(args, args.command)
        elif args.command == "field":
            record, code = _cmd_field(args)
        elif args.command == "solve":
            record, code = _cmd_solve(args, parser)
        elif args.command == "experiment":
            record, code = _cmd_experiment(args)
        elif args.command == "figure":
            return _cmd_figure(args, parser)
        else:
            record, code = _cmd_validate(args)
    except ZetaFieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(record, args.format, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
