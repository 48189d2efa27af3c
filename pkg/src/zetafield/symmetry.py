"""Pairing of inside-strip and outside-strip lines of equal potential.

For alpha in (0, 1/2) the inside potential is log(1/(1 - 2 alpha)); the
matching outside line sits at alpha_prime > 1/2 where zeta(2 alpha_prime)
equals 1/(1 - 2 alpha).  zeta decreases strictly from +inf to 1 on the
real ray right of 1, so the solution is unique and bracketable.  The
inverse direction alpha = (1 - 1/zeta(2 alpha_prime))/2 is also provided,
with 1/zeta computable from the engine reciprocal, a truncated product
over primes, or a truncated Moebius sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import NoBracket, NoConvergence, OutOfDomain, ZetaFieldError
from .quadrature import QuadratureResult, integrate_theta_form
from .zeta import EvalOptions, inverse_zeta_partials, zeta, zeta_log_derivative
from .zeros import ZeroOrdinates

_ALPHA_PRIME_FLOOR = 0.5 + 1e-6
_ALPHA_PRIME_CAP = 50.0
_BISECT_WIDTH = 1e-3
_MAX_ITER = 200
_THETA_MAX_DEFAULT = 0.999 * (math.pi / 2.0)
_SWEEP_MARGIN = 1e-3


@dataclass(frozen=True)
class SymmetryPair:
    """One solved (alpha, alpha_prime) pair and its derived line data.

    potential is the shared value log(1/(1 - 2 alpha)); rho_inside and
    rho_outside are the two vertical lines of equal potential, and rho0 is
    the common scale (1/2 - alpha) of both Lorentz weights.
    """

    alpha: float
    alpha_prime: float
    potential: float
    rho_inside: float
    rho_outside: float
    rho0: float

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha < 0.5):
            raise OutOfDomain(f"alpha must lie in (0, 1/2), got {self.alpha!r}")
        if not (self.alpha_prime > 0.5):
            raise OutOfDomain(f"alpha_prime must exceed 1/2, got {self.alpha_prime!r}")
        if not (self.potential > 0.0):
            raise OutOfDomain("shared potential must be positive")
        if self.rho_inside != 0.5 + self.alpha:
            raise OutOfDomain("rho_inside must equal 1/2 + alpha")
        if self.rho_outside != 2.0 * self.alpha_prime + self.alpha - 0.5:
            raise OutOfDomain("rho_outside must equal 2 alpha_prime + alpha - 1/2")
        if not (self.rho_outside > 1.0):
            raise OutOfDomain("the outside line must lie right of the strip")
        if self.rho0 != 0.5 - self.alpha:
            raise OutOfDomain("rho0 must equal 1/2 - alpha")


def _log_zeta_real(x: float, opts: EvalOptions | None) -> float:
    return math.log(zeta(complex(x, 0.0), opts).real)


def solve_alpha_prime(
    alpha: float, tol: float = 1e-10, opts: EvalOptions | None = None
) -> SymmetryPair:
    """Finds the alpha_prime > 1/2 with zeta(2 alpha_prime) = 1/(1 - 2 alpha).

    Bisection on [1/2 + 1e-6, 50] narrows the root to 1e-3, then Newton
    steps on log zeta(2a) - log target finish quadratically; steps that
    would leave the bracket fall back to bisection.  Convergence is judged
    relative to zeta itself: |zeta(2 alpha_prime) - target| <= tol * zeta.
    """
    if not (math.isfinite(alpha) and 0.0 < alpha < 0.5):
        raise OutOfDomain(f"alpha must lie in (0, 1/2), got {alpha!r}")
    if not (tol > 0.0):
        raise OutOfDomain(f"tol must be positive, got {tol!r}")

    # target y = 1/(1 - 2 alpha), compared in log space for stability
    ln_y = -math.log1p(-2.0 * alpha)
    if math.expm1(ln_y) <= tol:
        raise NoBracket(
            f"target 1/(1 - 2 alpha) = {math.exp(ln_y)!r} lies within tol of 1; "
            f"alpha_prime would exceed the cap {_ALPHA_PRIME_CAP}"
        )

    lo, hi = _ALPHA_PRIME_FLOOR, _ALPHA_PRIME_CAP
    g_lo = _log_zeta_real(2.0 * lo, opts) - ln_y
    g_hi = _log_zeta_real(2.0 * hi, opts) - ln_y
    if g_lo <= 0.0:
        raise NoBracket(
            f"target exceeds zeta at the bracket floor {_ALPHA_PRIME_FLOOR}; "
            "alpha is too close to 1/2"
        )
    if g_hi >= 0.0:
        raise NoBracket(f"target not reachable below the cap {_ALPHA_PRIME_CAP}")

    while hi - lo > _BISECT_WIDTH:
        mid = 0.5 * (lo + hi)
        if _log_zeta_real(2.0 * mid, opts) - ln_y > 0.0:
            lo = mid
        else:
            hi = mid

    a = 0.5 * (lo + hi)
    for _ in range(_MAX_ITER):
        ln_z = _log_zeta_real(2.0 * a, opts)
        if abs(math.expm1(ln_y - ln_z)) <= tol:
            break
        step = (ln_z - ln_y) / (2.0 * zeta_log_derivative(complex(2.0 * a, 0.0), opts).real)
        if ln_z - ln_y > 0.0:
            lo = a
        else:
            hi = a
        proposal = a - step
        a = proposal if lo < proposal < hi else 0.5 * (lo + hi)
    else:
        raise NoConvergence(f"root refinement did not converge for alpha = {alpha!r}")

    return SymmetryPair(
        alpha=alpha,
        alpha_prime=a,
        potential=ln_y,
        rho_inside=0.5 + alpha,
        rho_outside=2.0 * a + alpha - 0.5,
        rho0=0.5 - alpha,
    )


@dataclass(frozen=True)
class AlphaEstimate:
    """alpha recovered from alpha_prime, with the truncation tail if any.

    tail_bound is 0 for the direct engine reciprocal; for the partial
    product and Moebius methods it bounds |estimate - true alpha| from the
    corresponding partial-sum tail.
    """

    alpha: float
    method: str
    tail_bound: float


def alpha_from_alpha_prime(
    alpha_prime: float,
    method: str = "direct",
    prime_limit: int = 10**6,
    n_max: int = 10**6,
    opts: EvalOptions | None = None,
) -> AlphaEstimate:
    """Inverts the pairing: alpha = (1 - 1/zeta(2 alpha_prime))/2."""
    if not (math.isfinite(alpha_prime) and alpha_prime > 0.5):
        raise OutOfDomain(f"alpha_prime must exceed 1/2, got {alpha_prime!r}")
    if method not in ("direct", "euler_product", "mobius_sum"):
        raise OutOfDomain(f"unknown method {method!r}")

    if method == "direct":
        # no sieving needed for the engine reciprocal
        inv = 1.0 / zeta(complex(2.0 * alpha_prime, 0.0), opts).real
        return AlphaEstimate(alpha=0.5 * (1.0 - inv), method=method, tail_bound=0.0)

    parts = inverse_zeta_partials(
        2.0 * alpha_prime, prime_limit=prime_limit, n_max=n_max, opts=opts
    )
    if method == "euler_product":
        inv, tail = parts.euler_product, parts.tail_bounds[0]
    else:
        inv, tail = parts.mobius_sum, parts.tail_bounds[1]
    return AlphaEstimate(alpha=0.5 * (1.0 - inv), method=method, tail_bound=0.5 * tail)


@dataclass(frozen=True)
class SymmetryResidual:
    """Both theta-form integrals of a pair and their difference."""

    inside: QuadratureResult
    outside: QuadratureResult
    difference: float

    @property
    def combined_error(self) -> float:
        return self.inside.total_error + self.outside.total_error


def symmetry_residual(
    pair: SymmetryPair,
    theta_max: float = _THETA_MAX_DEFAULT,
    tol: float = 1e-9,
    zeros: ZeroOrdinates | None = None,
    workers: int = 1,
    max_panels: int = 20000,
    opts: EvalOptions | None = None,
) -> SymmetryResidual:
    """Compares the truncated inside and outside integrals of a pair.

    Both lines share the scale rho0 and the angular cut, so the two
    truncations discard tails of the same kernel shape.  The outside
    integral converges to log zeta(2 alpha_prime) unconditionally; the
    inside one reaching the same value is the zero-location-sensitive
    statement.
    """
    inside = integrate_theta_form(
        pair.rho_inside,
        pair.rho0,
        theta_max=theta_max,
        tol=tol,
        zeros=zeros,
        workers=workers,
        max_panels=max_panels,
        opts=opts,
    )
    outside = integrate_theta_form(
        pair.rho_outside,
        pair.rho0,
        theta_max=theta_max,
        tol=tol,
        zeros=zeros,
        workers=workers,
        max_panels=max_panels,
        opts=opts,
    )
    return SymmetryResidual(
        inside=inside,
        outside=outside,
        difference=inside.value - outside.value,
    )


@dataclass(frozen=True)
class SweepPoint:
    """Outcome at one grid point; failed points carry the message instead."""

    alpha: float
    pair: SymmetryPair | None
    residual: SymmetryResidual | None
    error: str | None


def sweep_symmetry(
    alpha_grid: Sequence[float],
    theta_max: float = _THETA_MAX_DEFAULT,
    tol: float = 1e-9,
    solver_tol: float = 1e-10,
    zeros: ZeroOrdinates | None = None,
    workers: int = 1,
    max_panels: int = 20000,
    opts: EvalOptions | None = None,
) -> list[SweepPoint]:
    """Runs the pairing and the integral comparison over a grid of alpha.

    Grid points must stay 1e-3 away from both endpoints of (0, 1/2).
    Computational failures at one point are recorded on that point and do
    not abort the rest; output order follows input order.
    """
    grid = [float(a) for a in alpha_grid]
    for a in grid:
        if not (_SWEEP_MARGIN <= a <= 0.5 - _SWEEP_MARGIN):
            raise OutOfDomain(
                f"grid point {a!r} must lie in [{_SWEEP_MARGIN}, {0.5 - _SWEEP_MARGIN}]"
            )
    points: list[SweepPoint] = []
    for a in grid:
        try:
            pair = solve_alpha_prime(a, tol=solver_tol, opts=opts)
            residual = symmetry_residual(
                pair,
                theta_max=theta_max,
                tol=tol,
                zeros=zeros,
                workers=workers,
                max_panels=max_panels,
                opts=opts,
            )
        except ZetaFieldError as exc:
            points.append(SweepPoint(alpha=a, pair=None, residual=None, error=str(exc)))
        else:
            points.append(SweepPoint(alpha=a, pair=pair, residual=residual, error=None))
    return points
