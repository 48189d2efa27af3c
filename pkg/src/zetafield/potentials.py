"""Vertical-line potentials of log |zeta| and their closed forms.

A vertical line at abscissa rho carries the Lorentz-weighted mean of
log |zeta|; for rho + rho0 away from 1 this mean has the closed value

    log( zeta(rho + rho0) (rho + rho0 - 1) / (|1 - rho| + rho0) ).

Two derived potentials live on the single parameter alpha, with the line
placed at rho = 1/2 + alpha and the scale locked to rho0 = |1/2 - alpha|:
phi1 integrates log |zeta(s)(s - 1)| against the plain kernel and phi2
against the squared kernel.  Both have two-branch closed forms that
change character across alpha = 1/2 and genuinely diverge there, so a
small guard interval around 1/2 is refused outright.  Inside the strip
(alpha < 1/2) the closed values are conditional on the zeros staying on
the critical line; the numeric sides are computed unconditionally and the
residual is reported, never absorbed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivergentAtBoundary, OutOfDomain, PoleAtOne
from .quadrature import LorentzMeasure, QuadratureResult, integrate_lorentz
from .zeta import EULER_GAMMA, EvalOptions, zeta, zeta_log_derivative
from .zeros import ZeroOrdinates

_BOUNDARY_GUARD = 1e-6
_POLE_GUARD = 1e-8

_REPORT_NAMES = ("phi", "phi1", "phi2", "remark")


@dataclass(frozen=True)
class PotentialReport:
    """Numeric and closed value of one potential, with the error budget.

    residual is defined as numeric - closed and is stored rather than
    recomputed, so the subtraction happens exactly once.
    """

    name: str
    alpha: float
    rho: float
    rho0: float
    numeric: float
    closed: float
    residual: float
    quadrature: QuadratureResult

    def __post_init__(self) -> None:
        if self.name not in _REPORT_NAMES:
            raise OutOfDomain(f"unknown potential name {self.name!r}")
        if self.residual != self.numeric - self.closed:
            raise OutOfDomain("residual must equal numeric - closed")


def log_zeta_residue(x: float, opts: EvalOptions | None = None) -> float:
    """log(zeta(x) * (x - 1)) on the real ray x > 1/2.

    The product extends continuously through the pole at x = 1 with value
    1, so arguments within 1e-8 of 1 return 0 instead of evaluating zeta.
    The product is positive on the whole ray: both factors flip sign
    together at x = 1.
    """
    if not math.isfinite(x) or x <= 0.5:
        raise OutOfDomain(f"log_zeta_residue needs x > 1/2, got {x!r}")
    if abs(x - 1.0) < _POLE_GUARD:
        return 0.0
    value = zeta(complex(x, 0.0), opts).real * (x - 1.0)
    return math.log(value)


def _report(
    name: str,
    alpha: float,
    rho: float,
    rho0: float,
    closed: float,
    quadrature: QuadratureResult,
) -> PotentialReport:
    return PotentialReport(
        name=name,
        alpha=alpha,
        rho=rho,
        rho0=rho0,
        numeric=quadrature.value,
        closed=closed,
        residual=quadrature.value - closed,
        quadrature=quadrature,
    )


def phi_report(
    rho: float,
    rho0: float,
    t_max: float = 1000.0,
    tol: float = 1e-8,
    zeros: ZeroOrdinates | None = None,
    workers: int = 1,
    max_panels: int = 20000,
    opts: EvalOptions | None = None,
) -> PotentialReport:
    """Lorentz mean of log |zeta| at abscissa rho against the closed form.

    The closed side is log(zeta(rho + rho0)(rho + rho0 - 1)) minus
    log(|1 - rho| + rho0); when rho + rho0 falls within the pole guard of
    1 the first term is 0 by the residue limit and the second term stands
    alone.
    """
    if not math.isfinite(rho) or rho <= 0.5:
        raise OutOfDomain(f"abscissa rho must exceed 1/2, got {rho!r}")
    if not (math.isfinite(rho0) and rho0 > 0.0):
        raise OutOfDomain(f"rho0 must be positive and finite, got {rho0!r}")
    closed = log_zeta_residue(rho + rho0, opts) - math.log(abs(1.0 - rho) + rho0)
    quad = integrate_lorentz(
        rho,
        LorentzMeasure(rho0),
        kernel_power=1,
        t_max=t_max,
        tol=tol,
        zeros=zeros,
        integrand="log_abs_zeta",
        workers=workers,
        max_panels=max_panels,
        opts=opts,
    )
    return _report("phi", rho - 0.5, rho, rho0, closed, quad)


def _check_alpha(alpha: float) -> None:
    if not math.isfinite(alpha) or alpha <= 0.0:
        raise OutOfDomain(f"alpha must be positive, got {alpha!r}")
    if abs(alpha - 0.5) < _BOUNDARY_GUARD:
        raise DivergentAtBoundary(
            f"both branches diverge at alpha = 1/2; got alpha = {alpha!r}"
        )


def phi1_closed(alpha: float, opts: EvalOptions | None = None) -> float:
    """Two-branch closed form: 0 inside the strip, log(zeta(2a)(2a-1)) outside."""
    _check_alpha(alpha)
    if alpha < 0.5:
        return 0.0
    return log_zeta_residue(2.0 * alpha, opts)


def phi2_closed(alpha: float, opts: EvalOptions | None = None) -> float:
    """Squared-kernel branch values.

    Inside: -gamma / (2 (1/2 - alpha)).  Outside the same differentiation
    of the plain-kernel closed form in rho0 gives
    -(zeta'/zeta(2a) + 1/(2a-1))/(2a-1) + log(zeta(2a)(2a-1))/(2 (a-1/2)^2);
    the inside branch is that expression's limit across the pole, where
    zeta'/zeta(1+e) + 1/e tends to gamma.
    """
    _check_alpha(alpha)
    if alpha < 0.5:
        return -EULER_GAMMA / (2.0 * (0.5 - alpha))
    two_am1 = 2.0 * alpha - 1.0
    ratio = zeta_log_derivative(complex(2.0 * alpha, 0.0), opts).real
    return (
        -(ratio + 1.0 / two_am1) / two_am1
        + log_zeta_residue(2.0 * alpha, opts) / (2.0 * (alpha - 0.5) ** 2)
    )


def phi1_report(
    alpha: float,
    t_max: float = 1000.0,
    tol: float = 1e-8,
    zeros: ZeroOrdinates | None = None,
    workers: int = 1,
    max_panels: int = 20000,
    opts: EvalOptions | None = None,
) -> PotentialReport:
    """Plain-kernel potential of log |zeta(s)(s - 1)| at rho = 1/2 + alpha."""
    closed = phi1_closed(alpha, opts)
    rho = 0.5 + alpha
    rho0 = abs(0.5 - alpha)
    quad = integrate_lorentz(
        rho,
        LorentzMeasure(rho0),
        kernel_power=1,
        t_max=t_max,
        tol=tol,
        zeros=zeros,
        integrand="log_abs_zeta_shifted",
        workers=workers,
        max_panels=max_panels,
        opts=opts,
    )
    return _report("phi1", alpha, rho, rho0, closed, quad)


def phi2_report(
    alpha: float,
    t_max: float = 1000.0,
    tol: float = 1e-8,
    zeros: ZeroOrdinates | None = None,
    workers: int = 1,
    max_panels: int = 20000,
    opts: EvalOptions | None = None,
) -> PotentialReport:
    """Squared-kernel potential of log |zeta(s)(s - 1)| at rho = 1/2 + alpha.

    The numeric side keeps the same rho0/pi prefactor as the plain kernel,
    with only the denominator squared; the closed side is validated against
    exactly that normalization.
    """
    closed = phi2_closed(alpha, opts)
    rho = 0.5 + alpha
    rho0 = abs(0.5 - alpha)
    quad = integrate_lorentz(
        rho,
        LorentzMeasure(rho0),
        kernel_power=2,
        t_max=t_max,
        tol=tol,
        zeros=zeros,
        integrand="log_abs_zeta_shifted",
        workers=workers,
        max_panels=max_panels,
        opts=opts,
    )
    return _report("phi2", alpha, rho, rho0, closed, quad)


def remark_closed(rho: float, opts: EvalOptions | None = None) -> float:
    """Closed potential for the scale choice rho0 = rho.

    log(zeta(2r)(2r-1)) for 1/2 < r < 1 and log(zeta(2r)) for r > 1; the
    pole factor |1 - r| + r collapses to 1 on the left branch and to
    2r - 1 on the right, which is why the branches join continuously at 1.
    """
    if not math.isfinite(rho) or rho <= 0.5:
        raise OutOfDomain(f"rho must exceed 1/2, got {rho!r}")
    if abs(rho - 1.0) < _POLE_GUARD:
        raise PoleAtOne(f"integrand passes through the pole at rho = {rho!r}")
    if rho < 1.0:
        return log_zeta_residue(2.0 * rho, opts)
    return math.log(zeta(complex(2.0 * rho, 0.0), opts).real)


def remark_potential(
    rho: float,
    t_max: float = 1000.0,
    tol: float = 1e-8,
    zeros: ZeroOrdinates | None = None,
    workers: int = 1,
    max_panels: int = 20000,
    opts: EvalOptions | None = None,
) -> PotentialReport:
    """Lorentz mean of log |zeta| with the scale tied to the abscissa."""
    closed = remark_closed(rho, opts)
    quad = integrate_lorentz(
        rho,
        LorentzMeasure(rho),
        kernel_power=1,
        t_max=t_max,
        tol=tol,
        zeros=zeros,
        integrand="log_abs_zeta",
        workers=workers,
        max_panels=max_panels,
        opts=opts,
    )
    return _report("remark", rho - 0.5, rho, rho, closed, quad)


def electric_field(alpha: float, variant: str, opts: EvalOptions | None = None) -> float:
    """Field strength at parameter alpha under either derivative convention.

    d_alpha differentiates the potential in alpha: 2/(1 - 2a) inside the
    strip and 2 zeta'/zeta(2a) outside.  d_rho differentiates in the line
    position: gamma + 1/(1 - 2a) inside and zeta'/zeta(2a) outside.
    """
    if variant not in ("d_alpha", "d_rho"):
        raise OutOfDomain(f"variant must be d_alpha or d_rho, got {variant!r}")
    _check_alpha(alpha)
    if alpha < 0.5:
        if variant == "d_alpha":
            return 2.0 / (1.0 - 2.0 * alpha)
        return EULER_GAMMA + 1.0 / (1.0 - 2.0 * alpha)
    ratio = zeta_log_derivative(complex(2.0 * alpha, 0.0), opts).real
    if variant == "d_alpha":
        return 2.0 * ratio
    return ratio
