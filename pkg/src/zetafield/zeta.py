"""Riemann zeta evaluation engine on the half-plane Re(s) > 0.

The analytic core is the accelerated alternating (Dirichlet eta) series
with Chebyshev-derived coefficients, divided by 1 - 2**(1 - s).  The
truncation error of that scheme at height t shrinks like (3 + sqrt(8))**-n
but grows like exp(pi*|t|/2), so term counts scale linearly with |t| and
evaluations stay practical only for heights up to a few thousand.  Requests
that would exceed the configured term cap raise NoConvergence instead of
silently degrading.

Also provides the logarithmic derivative via the termwise-differentiated
series, a segmented Mobius sieve, and partial-sum approximations of
1/zeta(s) on the real axis with integral-test tail bounds.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import CapacityExceeded, NoConvergence, OutOfDomain, PoleAtOne

#: Euler-Mascheroni constant, correctly rounded to double precision.
EULER_GAMMA = 0.5772156649015329

_LN2 = math.log(2.0)
_LOG_ACCEL = math.log(3.0 + math.sqrt(8.0))  # per-term gain of the acceleration
_POLE_GUARD = 1e-8
_SIEVE_CAP = 10**8
_TERM_MARGIN = 8

# Series lengths are rounded up to one of these so coefficient tables are
# shared across evaluations (at most ~50% extra terms, which only helps
# accuracy).  The ladder grows by factors of 1.5 up to the largest length
# any caller may configure.
_BUCKETS: list[int] = [16]
while _BUCKETS[-1] < 2**20:
    _BUCKETS.append((_BUCKETS[-1] * 3 + 1) // 2)
_BUCKET_ARRAY = np.array(_BUCKETS)


@dataclass(frozen=True)
class EvalOptions:
    """Accuracy knobs for the series engine.

    abs_tol is the absolute tolerance targeted by the truncation model.
    Near machine precision the model still picks a term count but float64
    round-off (roughly 1e-14 at large heights) becomes the real floor.
    """

    abs_tol: float = 1e-12
    max_terms: int = 2000

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0.0) or not math.isfinite(self.abs_tol):
            raise OutOfDomain(f"abs_tol must be positive and finite, got {self.abs_tol!r}")
        if int(self.max_terms) < 16:
            raise OutOfDomain(f"max_terms must be at least 16, got {self.max_terms!r}")


DEFAULT_OPTIONS = EvalOptions()

_cache_lock = threading.Lock()
_weights_cache: dict[int, np.ndarray] = {}
_logk_cache: dict[int, np.ndarray] = {}


def _alternating_weights(n: int) -> np.ndarray:
    """Signed acceleration coefficients for an n-term eta sum.

    Entry k holds (-1)**k * (d_k - d_n) / d_n where the d_k are the
    Chebyshev-polynomial partial sums d_k = n * sum_{j<=k} (n+j-1)! 4**j /
    ((n-j)! (2j)!).  The ratios are formed in exact rational arithmetic so
    the only rounding is the final conversion to float64; every entry lies
    in (0, 1].
    """
    with _cache_lock:
        cached = _weights_cache.get(n)
    if cached is not None:
        return cached

    term = Fraction(1)  # n * (n+j-1)! 4**j / ((n-j)! (2j)!) at j = 0
    d = [Fraction(1)]
    for j in range(1, n + 1):
        term *= Fraction(2 * (n + j - 1) * (n - j + 1), j * (2 * j - 1))
        d.append(d[-1] + term)
    dn = d[n]
    w = np.empty(n)
    sign = 1.0
    for k in range(n):
        w[k] = sign * float((d[k] - dn) / dn)
        sign = -sign
    w.setflags(write=False)
    with _cache_lock:
        _weights_cache[n] = w
    return w


def _log_arange(n: int) -> np.ndarray:
    with _cache_lock:
        cached = _logk_cache.get(n)
    if cached is not None:
        return cached
    logk = np.log(np.arange(1, n + 1, dtype=np.float64))
    logk.setflags(write=False)
    with _cache_lock:
        _logk_cache[n] = logk
    return logk


def _expm1_complex(z: np.ndarray) -> np.ndarray:
    """exp(z) - 1 for complex arrays without cancellation near z = 0."""
    x = np.real(z)
    y = np.imag(z)
    real = np.expm1(x) * np.cos(y) - 2.0 * np.sin(0.5 * y) ** 2
    return real + 1j * (np.exp(x) * np.sin(y))


def _eta_denominator(s: np.ndarray) -> np.ndarray:
    # 1 - 2**(1-s), computed as -expm1((1-s) ln 2) to keep full relative
    # precision near the removable singularity at s = 1.
    return -_expm1_complex((1.0 - s) * _LN2)


def _terms_needed(t_abs: np.ndarray, denom_abs: np.ndarray, abs_tol: float) -> np.ndarray:
    """Series length per point from the truncation-error model.

    Model: |error| <= 3 (1 + 2|t|) exp(pi |t| / 2) / ((3+sqrt(8))**n |1 - 2**(1-s)|).
    """
    tol = np.maximum(abs_tol * denom_abs, 1e-300)
    need = (0.5 * math.pi * t_abs + np.log(3.0 * (1.0 + 2.0 * t_abs)) - np.log(tol)) / _LOG_ACCEL
    n = np.ceil(need).astype(np.int64) + _TERM_MARGIN
    return np.maximum(n, 16)


def _bucketed_lengths(raw: np.ndarray, max_terms: int, context: str) -> np.ndarray:
    worst = int(raw.max())
    if worst > max_terms:
        raise NoConvergence(
            f"{context}: {worst} series terms needed but max_terms = {max_terms}; "
            "raise max_terms or lower the requested height/tolerance"
        )
    idx = np.searchsorted(_BUCKET_ARRAY, np.minimum(raw, _BUCKET_ARRAY[-1]))
    n = np.maximum(_BUCKET_ARRAY[idx], raw)  # ladder exhausted: use exact length
    return np.minimum(n, max_terms)


def _check_sigma(sigma: float) -> None:
    if not math.isfinite(sigma):
        raise OutOfDomain(f"Re(s) must be finite, got {sigma!r}")
    if sigma <= 0.0:
        raise OutOfDomain(f"series engine requires Re(s) > 0, got Re(s) = {sigma!r}")


def _check_point(s: complex) -> None:
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise OutOfDomain(f"s must be finite, got {s!r}")
    _check_sigma(s.real)
    if abs(s - 1.0) < _POLE_GUARD:
        raise PoleAtOne(f"s = {s!r} lies within {_POLE_GUARD} of the pole at s = 1")


def _zeta_batch(sigma: float, t: np.ndarray, opts: EvalOptions) -> np.ndarray:
    """zeta(sigma + i t) for a float array t at fixed sigma > 0."""
    t = np.asarray(t, dtype=np.float64)
    s = sigma + 1j * t
    denom = _eta_denominator(s)
    raw = _terms_needed(np.abs(t), np.abs(denom), opts.abs_tol)
    lengths = _bucketed_lengths(raw, int(opts.max_terms), f"zeta at Re(s) = {sigma}")

    out = np.empty(t.shape, dtype=np.complex128)
    for n in np.unique(lengths):
        idx = np.nonzero(lengths == n)[0]
        logk = _log_arange(int(n))
        w = _alternating_weights(int(n))
        coeff = w * np.exp(-sigma * logk)
        tt = t[idx]
        acc = np.empty(tt.size, dtype=np.complex128)
        chunk = max(1, 2_000_000 // int(n))
        for i0 in range(0, tt.size, chunk):
            tc = tt[i0 : i0 + chunk]
            phases = np.exp((-1j) * tc[:, None] * logk[None, :])
            acc[i0 : i0 + chunk] = np.einsum("ij,j->i", phases, coeff.astype(np.complex128))
        out[idx] = -acc / denom[idx]
    return out


def zeta(s: complex, opts: EvalOptions | None = None) -> complex:
    """Riemann zeta at a single point with Re(s) > 0.

    Raises PoleAtOne within 1e-8 of s = 1, OutOfDomain for Re(s) <= 0 and
    NoConvergence when the height requires more than opts.max_terms terms.
    """
    s = complex(s)
    _check_point(s)
    return complex(_zeta_batch(s.real, np.array([s.imag]), opts or DEFAULT_OPTIONS)[0])


def log_abs_zeta(s: complex, opts: EvalOptions | None = None) -> float:
    """log |zeta(s)|; large negative but finite near a zero."""
    return float(np.log(abs(zeta(s, opts))))


def log_abs_zeta_batch(
    sigma: float, t: np.ndarray, opts: EvalOptions | None = None
) -> np.ndarray:
    """log |zeta(sigma + i t)| for an array of ordinates at fixed sigma."""
    t = np.asarray(t, dtype=np.float64)
    if not np.all(np.isfinite(t)):
        raise OutOfDomain("ordinates must be finite")
    _check_sigma(sigma)
    if abs(sigma - 1.0) < _POLE_GUARD and t.size and np.min(np.abs(t)) < _POLE_GUARD:
        raise PoleAtOne("batch touches the pole at s = 1")
    return np.log(np.abs(_zeta_batch(sigma, t, opts or DEFAULT_OPTIONS)))


def zeta_log_derivative(s: complex, opts: EvalOptions | None = None) -> complex:
    """zeta'(s) / zeta(s) from the termwise-differentiated eta series.

    The differentiated truncation error picks up a factor ~log(n) relative
    to the plain series; the extra terms added below absorb it.  Behaves as
    -1/(s-1) near the pole and blows up near any zeta zero, as the true
    function does.
    """
    s = complex(s)
    _check_point(s)
    opts = opts or DEFAULT_OPTIONS
    denom = complex(_eta_denominator(np.array([s]))[0])
    raw = int(_terms_needed(np.array([abs(s.imag)]), np.array([abs(denom)]), opts.abs_tol)[0])
    raw += max(16, raw // 4)
    n = int(_bucketed_lengths(np.array([raw]), int(opts.max_terms), "zeta_log_derivative")[0])

    logk = _log_arange(n)
    w = _alternating_weights(n)
    powers = w * np.exp(-s * logk)
    numer = -math.fsum(powers.real) - 1j * math.fsum(powers.imag)
    d_numer = powers * logk
    numer_prime = math.fsum(d_numer.real) + 1j * math.fsum(d_numer.imag)
    if numer == 0.0:
        raise NoConvergence(f"eta sum vanished at s = {s!r}; cannot form the ratio")
    return numer_prime / numer - _LN2 * (1.0 - denom) / denom


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit via a boolean Eratosthenes sieve."""
    if limit > _SIEVE_CAP:
        raise CapacityExceeded(f"prime sieve limit {limit} exceeds cap {_SIEVE_CAP}")
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.nonzero(flags)[0].astype(np.int64)


def mobius_sieve(n_max: int) -> np.ndarray:
    """Mobius function mu(1..n_max) by a segmented sieve.

    Returns an int8 array of length n_max + 1 with entry n equal to mu(n);
    entry 0 is a zero placeholder.  Only primes up to sqrt(n_max) are
    enumerated; each block tracks the un-sieved cofactor so the one
    possible large prime factor is recognized at the end of the block.
    """
    n_max = int(n_max)
    if n_max < 1:
        raise OutOfDomain(f"n_max must be >= 1, got {n_max}")
    if n_max > _SIEVE_CAP:
        raise CapacityExceeded(f"mobius sieve size {n_max} exceeds cap {_SIEVE_CAP}")

    mu = np.ones(n_max + 1, dtype=np.int8)
    mu[0] = 0
    small_primes = primes_up_to(math.isqrt(n_max))
    block = 1 << 20
    for lo in range(1, n_max + 1, block):
        hi = min(lo + block, n_max + 1)
        seg = mu[lo:hi]
        rem = np.arange(lo, hi, dtype=np.int64)
        for p in small_primes:
            p = int(p)
            start = ((lo + p - 1) // p) * p
            seg[start - lo :: p] *= -1
            q = p * p
            while q < hi:
                qstart = ((lo + q - 1) // q) * q
                rem[qstart - lo :: q] //= p
                q *= p
            rem[start - lo :: p] //= p
            sq = p * p
            sqstart = ((lo + sq - 1) // sq) * sq
            seg[sqstart - lo :: sq] = 0
        seg[rem > 1] *= -1
    mu[0] = 0
    return mu


@dataclass(frozen=True)
class InverseZetaPartials:
    """Partial-sum approximations of 1/zeta(s) with their tail bounds.

    tail_bounds packs (euler_product_tail, mobius_sum_tail); both come from
    the integral test on sum_{n > N} n**-s, with the prime-restricted sum
    bounded by the full integer sum (no density saving is claimed, so the
    bound is always valid).
    """

    euler_product: float
    mobius_sum: float
    direct: float
    tail_bounds: tuple[float, float]


def inverse_zeta_partials(
    s: float,
    prime_limit: int = 10**6,
    n_max: int = 10**6,
    opts: EvalOptions | None = None,
) -> InverseZetaPartials:
    """1/zeta(s) for real s > 1 three ways: Euler product over primes <=
    prime_limit, Mobius sum over n <= n_max, and the reciprocal of the
    series engine value."""
    s = float(s)
    if not math.isfinite(s) or s <= 1.0:
        raise OutOfDomain(f"partial sums of 1/zeta require real s > 1, got {s!r}")
    if prime_limit < 2 or n_max < 1:
        raise OutOfDomain("prime_limit must be >= 2 and n_max >= 1")

    direct = 1.0 / zeta(s, opts).real

    p = primes_up_to(int(prime_limit)).astype(np.float64)
    factors = -np.expm1(-s * np.log(p))  # 1 - p**-s without cancellation
    euler = float(np.prod(factors))

    mu = mobius_sieve(int(n_max))
    n = np.nonzero(mu)[0]
    mobius = float(np.sum(mu[n].astype(np.float64) * np.power(n.astype(np.float64), -s)))

    mobius_tail = float(n_max) ** (1.0 - s) / (s - 1.0)
    log_tail = float(prime_limit) ** (1.0 - s) / ((s - 1.0) * -math.expm1(-s * math.log(prime_limit)))
    euler_tail = abs(euler) * math.expm1(log_tail)
    return InverseZetaPartials(
        euler_product=euler,
        mobius_sum=mobius,
        direct=direct,
        tail_bounds=(euler_tail, mobius_tail),
    )
