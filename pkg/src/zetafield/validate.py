"""Self-check suites shared by the CLI and the test suite.

Each suite returns plain CheckResult values so callers can render or
assert on them; nothing here prints or exits.  "Random" points are drawn
from a fixed-seed generator, keeping every run of a suite identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import OutOfDomain
from .potentials import (
    electric_field,
    log_zeta_residue,
    phi1_report,
    phi2_report,
    remark_closed,
)
from .quadrature import LorentzMeasure, integrate_lorentz, integrate_theta_form, log_linear_identity
from .symmetry import alpha_from_alpha_prime, solve_alpha_prime
from .zeta import EvalOptions, zeta, zeta_log_derivative

_SEED = 20260814


@dataclass(frozen=True)
class CheckResult:
    """One named check: observed magnitude against its allowance."""

    name: str
    passed: bool
    observed: float
    allowed: float


def _check(name: str, observed: float, allowed: float) -> CheckResult:
    return CheckResult(name=name, passed=observed <= allowed, observed=observed, allowed=allowed)


def suite_zeta(workers: int = 1, opts: EvalOptions | None = None) -> list[CheckResult]:
    """Engine regressions: classical values, a zero, conjugation symmetry."""
    del workers
    checks = [
        _check("zeta_at_2", abs(zeta(complex(2.0, 0.0), opts).real - math.pi**2 / 6.0), 1e-12),
        _check("zeta_at_4", abs(zeta(complex(4.0, 0.0), opts).real - math.pi**4 / 90.0), 1e-12),
        _check("zeta_at_3", abs(zeta(complex(3.0, 0.0), opts).real - 1.2020569031595943), 1e-12),
        _check("first_zero_modulus", abs(zeta(complex(0.5, 14.134725), opts)), 1e-5),
    ]
    rng = np.random.default_rng(_SEED)
    worst = 0.0
    for _ in range(20):
        sigma = float(rng.uniform(0.1, 3.0))
        t = float(rng.uniform(0.5, 60.0))
        direct = zeta(complex(sigma, -t), opts)
        mirrored = zeta(complex(sigma, t), opts).conjugate()
        worst = max(worst, abs(direct - mirrored))
    checks.append(_check("conjugation_symmetry", worst, 1e-14))
    return checks


def suite_quadrature(workers: int = 1, opts: EvalOptions | None = None) -> list[CheckResult]:
    """Quadrature against the zeta-free closed-form integral."""
    checks = []
    rng = np.random.default_rng(_SEED)
    for i in range(20):
        rho = float(rng.uniform(0.6, 3.0))
        rho0 = float(rng.uniform(0.1, 1.0))
        ident = log_linear_identity(rho, rho0, workers=workers)
        observed = abs(ident.residual)
        allowed = min(ident.quadrature.total_error, 1e-8)
        checks.append(_check(f"identity_{i:02d}", observed, allowed))

    for rho0 in (0.1, 0.25, 0.5, 1.0):
        result = integrate_lorentz(
            2.0,
            LorentzMeasure(rho0),
            kernel_power=1,
            t_max=1e4,
            tol=1e-12,
            integrand="one",
            workers=workers,
        )
        observed = abs(result.value + result.tail_estimate - 1.0)
        checks.append(_check(f"normalization_rho0_{rho0}", observed, 1e-10))

    t_max = 300.0
    line = integrate_lorentz(
        2.0, LorentzMeasure(1.0), kernel_power=1, t_max=t_max, tol=1e-9,
        workers=workers, opts=opts,
    )
    angular = integrate_theta_form(
        2.0, 1.0, theta_max=math.atan(t_max), tol=1e-9, workers=workers, opts=opts
    )
    checks.append(
        _check(
            "theta_vs_t_consistency",
            abs(line.value - angular.value),
            line.error_estimate + angular.error_estimate + 1e-13,
        )
    )

    residuals = [
        abs(log_linear_identity(1.7, 0.35, tol=tol, workers=workers).residual)
        for tol in (1e-5, 5e-6, 2.5e-6, 1.25e-6)
    ]
    growth = max(b - a for a, b in zip(residuals, residuals[1:]))
    checks.append(_check("monotone_refinement", growth, 1e-13))
    return checks


def suite_theorem1(workers: int = 1, opts: EvalOptions | None = None) -> list[CheckResult]:
    """Numeric-vs-closed potential checks on both sides of the strip."""
    checks = []
    for alpha in (0.1, 0.2, 0.3, 0.4):
        report = phi1_report(alpha, workers=workers, opts=opts)
        checks.append(
            _check(
                f"phi1_inside_{alpha}", abs(report.numeric), report.quadrature.total_error
            )
        )
    for alpha in (0.75, 1.0, 1.5):
        report = phi1_report(alpha, workers=workers, opts=opts)
        checks.append(
            _check(
                f"phi1_outside_{alpha}", abs(report.residual), report.quadrature.total_error
            )
        )
    for alpha in (0.25, 1.0):
        report = phi2_report(alpha, workers=workers, opts=opts)
        side = "inside" if alpha < 0.5 else "outside"
        checks.append(
            _check(
                f"phi2_{side}_{alpha}", abs(report.residual), report.quadrature.total_error
            )
        )

    h = 1e-4
    diff = (log_zeta_residue(2.0 + h, opts) - log_zeta_residue(2.0 - h, opts)) / (2.0 * h)
    target = zeta_log_derivative(complex(2.0, 0.0), opts).real + 1.0
    checks.append(_check("derivative_consistency", abs(diff - target), 1e-7))

    alpha = 0.25
    closed_phi = -math.log1p(-2.0 * alpha)
    observed = abs(electric_field(alpha, "d_alpha", opts) - 2.0 * math.exp(closed_phi))
    checks.append(_check("field_potential_identity", observed, 1e-14))

    h = 1e-6
    left = remark_closed(1.0 - h, opts)
    right = remark_closed(1.0 + h, opts)
    base = math.log(zeta(complex(2.0, 0.0), opts).real)
    observed = max(abs(left - base), abs(right - base))
    checks.append(_check("remark_continuity", observed, 3e-6))
    return checks


def suite_symmetry(workers: int = 1, opts: EvalOptions | None = None) -> list[CheckResult]:
    """Solver round trips, monotonicity, and partial-method agreement."""
    del workers
    checks = []
    tol = 1e-10
    grid = [0.05 * k for k in range(1, 10)]
    pairs = [solve_alpha_prime(a, tol=tol, opts=opts) for a in grid]

    worst_rt = 0.0
    for a, pair in zip(grid, pairs):
        back = alpha_from_alpha_prime(pair.alpha_prime, "direct", opts=opts).alpha
        worst_rt = max(worst_rt, abs(back - a))
    checks.append(_check("round_trip", worst_rt, 10.0 * tol))

    primes = [p.alpha_prime for p in pairs]
    growth = max(b - a for a, b in zip(primes, primes[1:]))
    checks.append(
        CheckResult(name="monotonic_map", passed=growth < 0.0, observed=growth, allowed=0.0)
    )

    worst_pot = 0.0
    for pair in pairs:
        ln_z = math.log(zeta(complex(2.0 * pair.alpha_prime, 0.0), opts).real)
        worst_pot = max(worst_pot, abs(pair.potential - ln_z))
    checks.append(_check("potential_match", worst_pot, 2.0 * tol))

    margin = min(pair.rho_outside - 1.0 for pair in pairs)
    checks.append(
        CheckResult(name="rho_outside_gt_1", passed=margin > 0.0, observed=margin, allowed=0.0)
    )

    for alpha_prime in (0.73723, 1.0, 1.5):
        direct = alpha_from_alpha_prime(alpha_prime, "direct", opts=opts)
        for method in ("euler_product", "mobius_sum"):
            est = alpha_from_alpha_prime(alpha_prime, method, opts=opts)
            checks.append(
                _check(
                    f"{method}_at_{alpha_prime}",
                    abs(est.alpha - direct.alpha),
                    est.tail_bound,
                )
            )
            if alpha_prime == 0.73723:
                checks.append(_check(f"{method}_tail_at_{alpha_prime}", est.tail_bound, 5e-3))
    return checks


_SUITES = {
    "zeta": suite_zeta,
    "quadrature": suite_quadrature,
    "theorem1": suite_theorem1,
    "symmetry": suite_symmetry,
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(name: str, workers: int = 1, opts: EvalOptions | None = None) -> list[CheckResult]:
    if name not in _SUITES:
        raise OutOfDomain(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    return _SUITES[name](workers=workers, opts=opts)
