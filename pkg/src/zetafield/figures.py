"""Sampled data behind the three standard plots.

Figure 1 samples both integrands of the angular form over a full period
[0, 2 pi] to exhibit their period-pi structure; figure 2 samples them on
the actual integration window [0, theta_max]; figure 3 draws the two
potential curves against their own parameters together with the tangent
lines at the matched pair, whose slopes are the two field values.

Near odd multiples of pi/2 the substituted height rho0 tan(theta) blows
up; samples whose height exceeds a cap are emitted as NaN so downstream
consumers see an explicit gap instead of a misleading value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidFigure, OutOfDomain
from .potentials import electric_field
from .quadrature import QUAD_EVAL_OPTIONS
from .symmetry import SymmetryPair, solve_alpha_prime
from .zeta import EvalOptions, log_abs_zeta_batch, zeta

_THETA_MAX_DEFAULT = 0.999 * (math.pi / 2.0)
_HEIGHT_CAP = 3000.0
_MIN_RESOLUTION = 16
_TANGENT_HALF_WIDTH = 0.1
_CURVE_MARGIN = 1e-3
_OUTSIDE_CURVE_END = 3.0


@dataclass(frozen=True)
class FigureSeries:
    """One labeled curve: paired x and y samples."""

    label: str
    x: np.ndarray
    y: np.ndarray

    def __post_init__(self) -> None:
        if self.x.shape != self.y.shape or self.x.ndim != 1:
            raise OutOfDomain("series arrays must be 1-d and equal length")
        self.x.setflags(write=False)
        self.y.setflags(write=False)


@dataclass(frozen=True)
class FigureData:
    """All series of one figure, in emission order."""

    figure_id: int
    series: tuple[FigureSeries, ...]

    def rows(self):
        """Yields (x, label, y) triples in series order."""
        for s in self.series:
            for xv, yv in zip(s.x.tolist(), s.y.tolist()):
                yield xv, s.label, yv


def _pair_for_reference(solver_tol: float, opts: EvalOptions | None) -> SymmetryPair:
    alpha = 0.5 * -math.expm1(-1.0)
    return solve_alpha_prime(alpha, tol=solver_tol, opts=opts)


def _integrand_samples(
    rho: float, rho0: float, theta: np.ndarray, height_cap: float, opts: EvalOptions
) -> np.ndarray:
    t = rho0 * np.tan(theta)
    y = np.full(theta.shape, math.nan)
    ok = np.abs(t) <= height_cap
    if np.any(ok):
        y[ok] = log_abs_zeta_batch(rho, np.abs(t[ok]), opts)
    return y


def _figure_integrands(
    resolution: int,
    theta_max: float | None,
    height_cap: float,
    solver_tol: float,
    opts: EvalOptions,
) -> tuple[FigureSeries, FigureSeries]:
    pair = _pair_for_reference(solver_tol, opts)
    if theta_max is None:
        # midpoint grid over one full period pair; stays off the tan poles
        # for any resolution not congruent to 2 mod 4, and the height cap
        # converts near-pole samples to NaN in every case
        theta = (np.arange(resolution) + 0.5) * (2.0 * math.pi / resolution)
    else:
        theta = np.linspace(0.0, theta_max, resolution)
    inside = _integrand_samples(pair.rho_inside, pair.rho0, theta, height_cap, opts)
    outside = _integrand_samples(pair.rho_outside, pair.rho0, theta, height_cap, opts)
    return (
        FigureSeries(label="inside", x=theta, y=inside),
        FigureSeries(label="outside", x=theta, y=outside),
    )


def _potential_curves(
    resolution: int, solver_tol: float, opts: EvalOptions
) -> tuple[FigureSeries, ...]:
    pair = _pair_for_reference(solver_tol, opts)
    a_star = pair.alpha
    ap_star = pair.alpha_prime

    x_in = np.unique(
        np.concatenate([np.linspace(_CURVE_MARGIN, 0.5 - _CURVE_MARGIN, resolution), [a_star]])
    )
    y_in = -np.log1p(-2.0 * x_in)

    x_out = np.unique(
        np.concatenate(
            [np.linspace(0.5 + _CURVE_MARGIN, _OUTSIDE_CURVE_END, resolution), [ap_star]]
        )
    )
    y_out = np.array([math.log(zeta(complex(2.0 * v, 0.0), opts).real) for v in x_out])

    slope_in = electric_field(a_star, "d_alpha", opts)
    xt_in = np.linspace(a_star - _TANGENT_HALF_WIDTH, a_star + _TANGENT_HALF_WIDTH, resolution)
    yt_in = 1.0 + slope_in * (xt_in - a_star)

    slope_out = electric_field(ap_star, "d_alpha", opts)
    xt_out = np.linspace(ap_star - _TANGENT_HALF_WIDTH, ap_star + _TANGENT_HALF_WIDTH, resolution)
    yt_out = 1.0 + slope_out * (xt_out - ap_star)

    return (
        FigureSeries(label="alpha_inside", x=x_in, y=y_in),
        FigureSeries(label="alpha_prime_outside", x=x_out, y=y_out),
        FigureSeries(label="tangent_inside", x=xt_in, y=yt_in),
        FigureSeries(label="tangent_outside", x=xt_out, y=yt_out),
    )


def figure_series(
    figure_id: int,
    resolution: int = 512,
    theta_max: float = _THETA_MAX_DEFAULT,
    height_cap: float = _HEIGHT_CAP,
    solver_tol: float = 1e-10,
    opts: EvalOptions | None = None,
) -> FigureData:
    """Returns the sampled series of figure 1, 2, or 3.

    resolution is the per-series sample count (figure 3's curve series add
    one sample so the marked points appear exactly).  theta_max applies to
    figure 2 only; figure 1 always covers [0, 2 pi].
    """
    if figure_id not in (1, 2, 3):
        raise InvalidFigure(f"figure id must be 1, 2, or 3, got {figure_id!r}")
    if not isinstance(resolution, int) or resolution < _MIN_RESOLUTION:
        raise OutOfDomain(f"resolution must be an integer >= 16, got {resolution!r}")
    if not (0.0 < theta_max < 0.5 * math.pi):
        raise OutOfDomain(f"theta_max must lie in (0, pi/2), got {theta_max!r}")
    opts = opts or QUAD_EVAL_OPTIONS

    if figure_id == 1:
        series = _figure_integrands(resolution, None, height_cap, solver_tol, opts)
    elif figure_id == 2:
        series = _figure_integrands(resolution, theta_max, height_cap, solver_tol, opts)
    else:
        series = _potential_curves(resolution, solver_tol, opts)
    return FigureData(figure_id=figure_id, series=tuple(series))
