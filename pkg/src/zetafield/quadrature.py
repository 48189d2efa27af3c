"""Adaptive quadrature of log |zeta| against Lorentz (Cauchy) kernels.

All integrals run on a 15-point Kronrod rule with the embedded 7-point
Gauss rule as error estimator.  Refinement is globally adaptive but
proceeds in waves: every round splits each panel whose error estimate is
within a factor of two of the current worst, so the panel tree is a pure
function of the panel state and is identical whether panels are evaluated
serially or by a thread pool.  Panel sums go through math.fsum, which is
exactly rounded and therefore order-independent, so serial and parallel
runs return bit-identical values.

Integrals over the whole line use the evenness of the integrands and are
assembled as 2 * integral over [0, t_max] plus an explicit tail estimate
from the kernel decay.  The theta-substituted form t = rho0 * tan(theta)
maps the line to a compact interval instead and records the equivalent
cut height.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import OutOfDomain, ToleranceNotReached
from .zeta import EvalOptions, log_abs_zeta_batch
from .zeros import ZeroOrdinates

# 15-point Kronrod nodes on [-1, 1] and weights; the odd-index nodes carry
# the embedded 7-point Gauss rule.
_K15_NODES = np.array([
    -0.9914553711208126, -0.9491079123427585, -0.8648644233597691,
    -0.7415311855993944, -0.5860872354676911, -0.4058451513773972,
    -0.2077849550078985, 0.0, 0.2077849550078985, 0.4058451513773972,
    0.5860872354676911, 0.7415311855993944, 0.8648644233597691,
    0.9491079123427585, 0.9914553711208126,
])
_K15_WEIGHTS = np.array([
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278, 0.2044329400752989,
    0.1903505780647854, 0.1690047266392679, 0.1406532597155259,
    0.1047900103222502, 0.0630920926299785, 0.0229353220105292,
])
_G7_WEIGHTS = np.array([
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694, 0.3818300505051189, 0.2797053914892767,
    0.1294849661688697,
])

_EPS = float(np.finfo(np.float64).eps)
_TINY = float(np.finfo(np.float64).tiny)

#: zeta evaluation settings used inside quadrature; tight enough that the
#: panel error estimates dominate the budget at any supported height.
QUAD_EVAL_OPTIONS = EvalOptions(abs_tol=1e-13, max_terms=20000)

_TAIL_SAMPLES = 64
_MAX_ROUNDS = 400
_STALL_ROUNDS = 8


@dataclass(frozen=True)
class LorentzMeasure:
    """Cauchy probability measure (rho0/pi) / (rho0**2 + t**2) dt."""

    rho0: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.rho0) or self.rho0 <= 0.0:
            raise OutOfDomain(f"rho0 must be positive and finite, got {self.rho0!r}")

    def weight(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=np.float64)
        return (self.rho0 / math.pi) / (self.rho0**2 + t * t)


@dataclass(frozen=True)
class QuadratureResult:
    """Value of a truncated integral plus its two-part error budget.

    error_estimate accumulates the per-panel Kronrod-Gauss differences;
    tail_estimate bounds whatever lies beyond the truncation height.  Their
    sum is the reported total error.
    """

    value: float
    error_estimate: float
    panels: int
    truncation_t: float
    tail_estimate: float

    def __post_init__(self) -> None:
        if self.error_estimate < 0.0 or self.tail_estimate < 0.0:
            raise OutOfDomain("error components must be non-negative")
        if self.panels < 1:
            raise OutOfDomain("a result must cover at least one panel")

    @property
    def total_error(self) -> float:
        return self.error_estimate + self.tail_estimate


def _apply_chunked(f: Callable[[np.ndarray], np.ndarray], x: np.ndarray, workers: int) -> np.ndarray:
    """Evaluate f over x, optionally splitting across a thread pool.

    Chunks are contiguous and results are stitched back in order, so the
    output does not depend on scheduling.
    """
    if workers <= 1 or x.size < 64:
        return np.asarray(f(x), dtype=np.float64)
    bounds = np.linspace(0, x.size, workers + 1).astype(int)
    chunks = [x[bounds[i] : bounds[i + 1]] for i in range(workers) if bounds[i] < bounds[i + 1]]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(f, chunks))
    return np.concatenate([np.asarray(p, dtype=np.float64) for p in parts])


def _eval_panels(
    f: Callable[[np.ndarray], np.ndarray], lo: np.ndarray, hi: np.ndarray, workers: int
) -> tuple[np.ndarray, np.ndarray]:
    """K15 values and error estimates for a batch of panels."""
    half = 0.5 * (hi - lo)
    center = 0.5 * (lo + hi)
    x = center[:, None] + half[:, None] * _K15_NODES[None, :]
    fx = _apply_chunked(f, x.ravel(), workers).reshape(x.shape)
    if not np.all(np.isfinite(fx)):
        bad = x.ravel()[~np.isfinite(fx.ravel())][0]
        raise OutOfDomain(f"integrand is not finite at t = {bad!r}")

    resk = np.einsum("ij,j->i", fx, _K15_WEIGHTS)
    resg = np.einsum("ij,j->i", fx[:, 1::2], _G7_WEIGHTS)
    resabs = np.einsum("ij,j->i", np.abs(fx), _K15_WEIGHTS)
    mean = 0.5 * resk
    resasc = np.einsum("ij,j->i", np.abs(fx - mean[:, None]), _K15_WEIGHTS)

    value = resk * half
    resabs = resabs * half
    resasc = resasc * half
    err = np.abs(resk - resg) * half
    # standard Kronrod scaling: trust |K - G| only once it is small
    # relative to the variation captured by resasc
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * err / resasc) ** 1.5)
    err = np.where((resasc > 0.0) & (err > 0.0), scaled, err)
    floor_mask = resabs > _TINY / (50.0 * _EPS)
    err = np.where(floor_mask, np.maximum(err, 50.0 * _EPS * resabs), err)
    return value, err


def _adaptive(
    f: Callable[[np.ndarray], np.ndarray],
    points: np.ndarray,
    tol: float,
    max_panels: int,
    workers: int,
    scale: float,
) -> tuple[float, float, int]:
    """Globally adaptive refinement from an initial partition.

    Returns (scale * sum, scale * error_sum, panel_count).  tol applies to
    the scaled error.  Raises ToleranceNotReached when the panel budget
    runs out; a round-off stall (no progress while above tolerance) ends
    refinement and reports the honest estimate instead.
    """
    lo = points[:-1].copy()
    hi = points[1:].copy()
    val, err = _eval_panels(f, lo, hi, workers)

    stalled = 0
    last_total = math.inf
    for _ in range(_MAX_ROUNDS):
        total = math.fsum(err) * scale
        if total <= tol:
            break
        if total > 0.999 * last_total:
            stalled += 1
            if stalled >= _STALL_ROUNDS:
                break
        else:
            stalled = 0
        last_total = total

        emax = float(err.max())
        if emax <= 0.0:
            break
        mask = err >= 0.5 * emax
        n_split = int(np.count_nonzero(mask))
        if lo.size + n_split > max_panels:
            raise ToleranceNotReached(
                f"panel budget {max_panels} exhausted with error {total:.3e} > tol {tol:.3e}"
            )
        slo, shi = lo[mask], hi[mask]
        mid = 0.5 * (slo + shi)
        child_lo = np.concatenate([slo, mid])
        child_hi = np.concatenate([mid, shi])
        cval, cerr = _eval_panels(f, child_lo, child_hi, workers)
        lo = np.concatenate([lo[~mask], child_lo])
        hi = np.concatenate([hi[~mask], child_hi])
        val = np.concatenate([val[~mask], cval])
        err = np.concatenate([err[~mask], cerr])

    value = math.fsum(val) * scale
    error = math.fsum(err) * scale
    return value, error, int(lo.size)


def _base_integrand(
    integrand: str | Callable[[np.ndarray], np.ndarray],
    rho: float,
    opts: EvalOptions,
) -> Callable[[np.ndarray], np.ndarray]:
    if callable(integrand):
        return integrand
    if integrand == "log_abs_zeta":
        return lambda t: log_abs_zeta_batch(rho, t, opts)
    if integrand == "log_abs_zeta_shifted":
        shift = (1.0 - rho) ** 2
        return lambda t: log_abs_zeta_batch(rho, t, opts) + 0.5 * np.log(shift + t * t)
    if integrand == "one":
        return lambda t: np.ones_like(np.asarray(t, dtype=np.float64))
    raise OutOfDomain(f"unknown integrand {integrand!r}")


def _tail_bound(
    base: Callable[[np.ndarray], np.ndarray],
    rho0: float,
    t_max: float,
    kernel_power: int,
    workers: int,
) -> float:
    """Empirical tail bound 2 (rho0/pi) M / t_max (or /(3 t_max**3) for the
    squared kernel) with M sampled over [t_max, 2 t_max]."""
    samples = np.linspace(t_max, 2.0 * t_max, _TAIL_SAMPLES)
    m = float(np.max(np.abs(_apply_chunked(base, samples, workers))))
    if kernel_power == 1:
        return 2.0 * (rho0 / math.pi) * m / t_max
    return 2.0 * (rho0 / math.pi) * m / (3.0 * t_max**3)


def _dyadic_endpoint_panels(theta_cut: float) -> np.ndarray:
    """Panel points accumulating dyadically toward pi/2 from theta_cut."""
    width = 0.5 * math.pi - theta_cut
    pts = 0.5 * math.pi - width * 2.0 ** -np.arange(0.0, 46.0)
    return np.unique(np.concatenate([pts, [0.5 * math.pi]]))


def _shifted_tail(
    rho: float,
    rho0: float,
    t_max: float,
    kernel_power: int,
    workers: int,
    opts: EvalOptions,
) -> float:
    """Tail estimate for the log |zeta(s)(s - 1)| integrand.

    The integrand splits into log |zeta| plus the explicit term
    0.5 log((1-rho)^2 + t^2).  The second piece grows like log t, so a
    max-times-kernel bound sampled on [t_max, 2 t_max] would undercount
    it; instead its tail integral is evaluated essentially exactly through
    the substitution t = rho0 tan(theta), which compactifies (t_max, inf).
    The zeta piece keeps the sampled bound, which is what M measures.
    """
    samples = np.linspace(t_max, 2.0 * t_max, _TAIL_SAMPLES)
    m = float(np.max(np.abs(log_abs_zeta_batch(rho, samples, opts))))
    if kernel_power == 1:
        zeta_part = 2.0 * (rho0 / math.pi) * m / t_max
    else:
        zeta_part = 2.0 * (rho0 / math.pi) * m / (3.0 * t_max**3)

    gap2 = (1.0 - rho) ** 2
    if kernel_power == 1:
        f = lambda theta: 0.5 * np.log(gap2 + (rho0 * np.tan(theta)) ** 2)
        scale = 2.0 / math.pi
    else:
        f = lambda theta: (
            0.5 * np.log(gap2 + (rho0 * np.tan(theta)) ** 2) * np.cos(theta) ** 2
        )
        scale = 2.0 / (math.pi * rho0**2)
    pts = _dyadic_endpoint_panels(math.atan2(t_max, rho0))
    value, error, _ = _adaptive(f, pts, 1e-12, 4000, workers, scale=scale)
    return abs(value) + error + zeta_part


def _breakpoints(t_max: float, rho0: float, zero_splits: np.ndarray) -> np.ndarray:
    seeds = rho0 * np.array([0.5, 1.0, 2.0, 4.0, 8.0, 16.0])
    pts = np.concatenate([[0.0, t_max], seeds, zero_splits])
    pts = np.unique(pts[(pts >= 0.0) & (pts <= t_max)])
    if pts[0] != 0.0 or pts[-1] != t_max or pts.size < 2:
        raise OutOfDomain("degenerate integration interval")
    return pts


def integrate_lorentz(
    rho: float,
    measure: LorentzMeasure,
    kernel_power: int = 1,
    t_max: float = 1000.0,
    tol: float = 1e-8,
    zeros: ZeroOrdinates | None = None,
    integrand: str | Callable[[np.ndarray], np.ndarray] = "log_abs_zeta",
    workers: int = 1,
    max_panels: int = 20000,
    opts: EvalOptions | None = None,
) -> QuadratureResult:
    """Truncated integral of an even integrand against the Lorentz kernel.

    Computes 2 * int_0^t_max f(t) (rho0/pi) / (rho0**2 + t**2)**kernel_power dt
    where f defaults to log |zeta(rho + i t)|.  Panels are pre-split at
    every known zero ordinate below t_max; the row beyond t_max enters only
    through tail_estimate.  For 1/2 < rho < 1 the connection of the value
    to any closed form is conditional on the zeros lying on the critical
    line; the quadrature itself is unconditional.
    """
    if not math.isfinite(rho) or rho <= 0.5:
        raise OutOfDomain(f"abscissa rho must exceed 1/2, got {rho!r}")
    if kernel_power not in (1, 2):
        raise OutOfDomain(f"kernel_power must be 1 or 2, got {kernel_power!r}")
    if not (math.isfinite(t_max) and t_max > 0.0):
        raise OutOfDomain(f"t_max must be positive and finite, got {t_max!r}")
    if not (tol > 0.0):
        raise OutOfDomain(f"tol must be positive, got {tol!r}")

    opts = opts or QUAD_EVAL_OPTIONS
    zeros = zeros if zeros is not None else ZeroOrdinates.default()
    base = _base_integrand(integrand, rho, opts)
    rho0 = measure.rho0
    if kernel_power == 1:
        weighted = lambda t: base(t) * (rho0 / math.pi) / (rho0**2 + t * t)
    else:
        weighted = lambda t: base(t) * (rho0 / math.pi) / (rho0**2 + t * t) ** 2

    pts = _breakpoints(t_max, rho0, zeros.up_to(t_max))
    value, error, panels = _adaptive(weighted, pts, tol, max_panels, workers, scale=2.0)
    if integrand == "log_abs_zeta_shifted":
        tail = _shifted_tail(rho, rho0, t_max, kernel_power, workers, opts)
    else:
        tail = _tail_bound(base, rho0, t_max, kernel_power, workers)
    return QuadratureResult(
        value=value,
        error_estimate=error,
        panels=panels,
        truncation_t=t_max,
        tail_estimate=tail,
    )


def integrate_theta_form(
    rho: float,
    rho0: float,
    theta_max: float = 0.999 * (math.pi / 2),
    tol: float = 1e-9,
    zeros: ZeroOrdinates | None = None,
    workers: int = 1,
    max_panels: int = 20000,
    opts: EvalOptions | None = None,
) -> QuadratureResult:
    """(2/pi) * int_0^theta_max log |zeta(rho + i rho0 tan(theta))| d(theta).

    The substitution t = rho0 tan(theta) turns the Lorentz-weighted line
    integral into an integral over a compact angular interval; truncating
    at theta_max < pi/2 cuts the line at truncation_t = rho0 tan(theta_max),
    which is also where the tail bound takes over.
    """
    if not math.isfinite(rho) or rho <= 0.5:
        raise OutOfDomain(f"abscissa rho must exceed 1/2, got {rho!r}")
    if not (math.isfinite(rho0) and rho0 > 0.0):
        raise OutOfDomain(f"rho0 must be positive and finite, got {rho0!r}")
    if not (0.0 < theta_max < 0.5 * math.pi):
        raise OutOfDomain(f"theta_max must lie in (0, pi/2), got {theta_max!r}")
    if not (tol > 0.0):
        raise OutOfDomain(f"tol must be positive, got {tol!r}")

    opts = opts or QUAD_EVAL_OPTIONS
    zeros = zeros if zeros is not None else ZeroOrdinates.default()
    base = _base_integrand("log_abs_zeta", rho, opts)
    f = lambda theta: base(rho0 * np.tan(theta))

    t_cut = rho0 * math.tan(theta_max)
    mapped = np.arctan(zeros.up_to(t_cut) / rho0)
    pts = np.unique(np.concatenate([[0.0, theta_max], mapped[mapped < theta_max]]))
    value, error, panels = _adaptive(f, pts, tol, max_panels, workers, scale=2.0 / math.pi)
    tail = _tail_bound(base, rho0, t_cut, 1, workers)
    return QuadratureResult(
        value=value,
        error_estimate=error,
        panels=panels,
        truncation_t=t_cut,
        tail_estimate=tail,
    )


@dataclass(frozen=True)
class IdentityCheck:
    """Numeric vs closed value of the log-linear kernel integral."""

    numeric: float
    closed: float
    residual: float
    quadrature: QuadratureResult


def log_linear_identity(
    rho: float,
    rho0: float,
    t_max: float = 1000.0,
    tol: float = 1e-9,
    workers: int = 1,
    max_panels: int = 20000,
) -> IdentityCheck:
    """Checks (rho0/pi) int log |1 - rho + i t| / (rho0**2 + t**2) dt = log(|1 - rho| + rho0).

    The integrand is zeta-free, so the whole line is integrated exactly:
    |t| <= t_max in the t parameterization and the remainder through the
    compactifying substitution t = rho0 tan(theta), whose endpoint log
    growth the dyadic seed panels absorb.  Nothing is discarded, hence
    tail_estimate = 0 and truncation_t = inf.
    """
    if not (math.isfinite(rho) and math.isfinite(rho0) and rho0 > 0.0):
        raise OutOfDomain(f"need finite rho and positive rho0, got rho={rho!r}, rho0={rho0!r}")
    if not (math.isfinite(t_max) and t_max > 0.0):
        raise OutOfDomain(f"t_max must be positive and finite, got {t_max!r}")
    if not (tol > 0.0):
        raise OutOfDomain(f"tol must be positive, got {tol!r}")

    gap2 = (1.0 - rho) ** 2
    base = lambda t: 0.5 * np.log(gap2 + t * t)
    weighted = lambda t: base(t) * (rho0 / math.pi) / (rho0**2 + t * t)

    # near-axis seeds handle the log dip at t = 0 when rho is close to 1
    scales = rho0 * np.concatenate([2.0 ** np.arange(-20.0, 0.0), [1.0, 2.0, 4.0, 8.0, 16.0]])
    pts = np.unique(np.concatenate([[0.0, t_max], scales[scales < t_max]]))
    v1, e1, p1 = _adaptive(weighted, pts, 0.5 * tol, max_panels, workers, scale=2.0)

    pts2 = _dyadic_endpoint_panels(math.atan2(t_max, rho0))
    f2 = lambda theta: base(rho0 * np.tan(theta))
    v2, e2, p2 = _adaptive(f2, pts2, 0.5 * tol, max_panels, workers, scale=2.0 / math.pi)

    numeric = v1 + v2
    closed = math.log(abs(1.0 - rho) + rho0)
    result = QuadratureResult(
        value=numeric,
        error_estimate=e1 + e2,
        panels=p1 + p2,
        truncation_t=math.inf,
        tail_estimate=0.0,
    )
    return IdentityCheck(
        numeric=numeric,
        closed=closed,
        residual=numeric - closed,
        quadrature=result,
    )
