"""Adaptive quadrature: exactness, error accounting, and determinism.

Two integrands with known closed values anchor the checks: the constant 1
(whose Lorentz integral is a normalized arctangent) and the zeta-free log
kernel whose full-line value is log(|1 - rho| + rho0).
"""

import math

import numpy as np
import pytest

from zetafield import (
    LorentzMeasure,
    OutOfDomain,
    QuadratureResult,
    ToleranceNotReached,
    integrate_lorentz,
    integrate_theta_form,
    log_linear_identity,
)
from zetafield.quadrature import QUAD_EVAL_OPTIONS


def test_measure_weight_formula():
    m = LorentzMeasure(0.7)
    t = np.array([0.0, 1.0, -3.5])
    np.testing.assert_allclose(
        m.weight(t), (0.7 / math.pi) / (0.7**2 + t * t), rtol=0.0, atol=0.0
    )


@pytest.mark.parametrize("rho0", [0.0, -1.0, math.inf, math.nan])
def test_measure_rejects_bad_scale(rho0):
    with pytest.raises(OutOfDomain):
        LorentzMeasure(rho0)


def test_quadrature_result_invariants():
    r = QuadratureResult(
        value=1.0, error_estimate=1e-9, panels=3, truncation_t=10.0, tail_estimate=2e-9
    )
    assert r.total_error == 1e-9 + 2e-9
    with pytest.raises(OutOfDomain):
        QuadratureResult(
            value=1.0, error_estimate=-1e-9, panels=3, truncation_t=10.0, tail_estimate=0.0
        )
    with pytest.raises(OutOfDomain):
        QuadratureResult(
            value=1.0, error_estimate=0.0, panels=0, truncation_t=10.0, tail_estimate=0.0
        )


@pytest.mark.parametrize("rho0", [0.1, 0.25, 0.5, 1.0])
def test_unit_integrand_normalization(rho0):
    # the measure integrates to 1 over the whole line; the truncated value
    # must land below 1 and the tail bound must cover the difference
    r = integrate_lorentz(
        2.0, LorentzMeasure(rho0), integrand="one", t_max=1e4, tol=1e-12
    )
    assert r.value < 1.0
    assert abs(r.value + r.tail_estimate - 1.0) <= 1e-10
    exact = 2.0 / math.pi * math.atan(1e4 / rho0)
    assert abs(r.value - exact) <= 1e-12


def test_unit_integrand_squared_kernel():
    # with the squared denominator and unchanged prefactor the full-line
    # value is 1/(2 rho0**2)
    rho0 = 0.8
    r = integrate_lorentz(
        2.0, LorentzMeasure(rho0), kernel_power=2, integrand="one", t_max=1e4, tol=1e-12
    )
    exact = 1.0 / (2.0 * rho0**2)
    assert r.value < exact
    # the discarded mass plus the panel error covers the closed-form gap
    assert exact - r.value <= r.total_error
    assert r.tail_estimate <= 1e-8


def test_callable_integrand_matches_builtin():
    m = LorentzMeasure(0.5)
    builtin = integrate_lorentz(2.0, m, integrand="one", t_max=100.0, tol=1e-10)
    custom = integrate_lorentz(
        2.0,
        m,
        integrand=lambda t: np.ones_like(np.asarray(t, dtype=np.float64)),
        t_max=100.0,
        tol=1e-10,
    )
    assert custom.value == builtin.value
    assert custom.error_estimate == builtin.error_estimate


def test_non_finite_integrand_is_rejected():
    with pytest.raises(OutOfDomain):
        integrate_lorentz(
            2.0,
            LorentzMeasure(0.5),
            integrand=lambda t: np.full_like(np.asarray(t, dtype=np.float64), np.nan),
            t_max=10.0,
        )


def test_unknown_integrand_name_is_rejected():
    with pytest.raises(OutOfDomain):
        integrate_lorentz(2.0, LorentzMeasure(0.5), integrand="bogus")


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(rho=0.5),
        dict(rho=0.2),
        dict(rho=2.0, kernel_power=3),
        dict(rho=2.0, t_max=0.0),
        dict(rho=2.0, t_max=-5.0),
        dict(rho=2.0, tol=0.0),
    ],
)
def test_integrate_lorentz_domain_checks(kwargs):
    args = dict(rho=2.0, kernel_power=1, t_max=100.0, tol=1e-8)
    args.update(kwargs)
    rho = args.pop("rho")
    with pytest.raises(OutOfDomain):
        integrate_lorentz(rho, LorentzMeasure(0.5), **args)


def test_panel_budget_exhaustion_raises():
    # the initial partition already uses the whole budget, so the first
    # refinement wave must fail rather than return a low-quality value
    with pytest.raises(ToleranceNotReached):
        integrate_lorentz(
            0.8, LorentzMeasure(0.5), t_max=50.0, tol=1e-14, max_panels=16
        )


def test_log_linear_identity_random_pairs():
    rng = np.random.default_rng(20260814)
    for _ in range(6):
        rho = float(rng.uniform(0.6, 3.0))
        rho0 = float(rng.uniform(0.1, 1.0))
        check = log_linear_identity(rho, rho0)
        assert check.closed == math.log(abs(1.0 - rho) + rho0)
        assert check.residual == check.numeric - check.closed
        assert abs(check.residual) <= check.quadrature.total_error
        assert abs(check.residual) <= 1e-8
        assert check.quadrature.tail_estimate == 0.0
        assert check.quadrature.truncation_t == math.inf


def test_log_linear_identity_handles_vanishing_gap():
    # rho = 1 collapses the smooth log to log |t|, an integrable cusp at 0
    check = log_linear_identity(1.0, 0.3)
    assert abs(check.numeric - math.log(0.3)) <= 1e-8


def test_log_linear_identity_domain_checks():
    with pytest.raises(OutOfDomain):
        log_linear_identity(2.0, 0.0)
    with pytest.raises(OutOfDomain):
        log_linear_identity(math.inf, 0.5)
    with pytest.raises(OutOfDomain):
        log_linear_identity(2.0, 0.5, t_max=0.0)


def test_tighter_tolerance_does_not_worsen_error():
    loose = log_linear_identity(1.7, 0.35, tol=1e-4)
    tight = log_linear_identity(1.7, 0.35, tol=1e-7)
    assert tight.quadrature.error_estimate <= loose.quadrature.error_estimate + 1e-13
    assert abs(loose.residual) <= loose.quadrature.total_error
    assert abs(tight.residual) <= tight.quadrature.total_error


def test_theta_form_matches_line_form_at_common_cut():
    t_cut = 300.0
    rho, rho0 = 2.0, 1.0
    line = integrate_lorentz(
        rho, LorentzMeasure(rho0), t_max=t_cut, tol=1e-9, opts=QUAD_EVAL_OPTIONS
    )
    angular = integrate_theta_form(
        rho, rho0, theta_max=math.atan(t_cut / rho0), tol=1e-9, opts=QUAD_EVAL_OPTIONS
    )
    assert abs(line.value - angular.value) <= (
        line.error_estimate + angular.error_estimate + 1e-13
    )
    assert abs(angular.truncation_t - t_cut) <= 1e-9


def test_theta_form_domain_checks():
    with pytest.raises(OutOfDomain):
        integrate_theta_form(0.4, 0.5)
    with pytest.raises(OutOfDomain):
        integrate_theta_form(2.0, 0.0)
    with pytest.raises(OutOfDomain):
        integrate_theta_form(2.0, 0.5, theta_max=0.5 * math.pi)
    with pytest.raises(OutOfDomain):
        integrate_theta_form(2.0, 0.5, theta_max=-0.1)


def test_parallel_execution_is_bitwise_identical():
    serial = integrate_lorentz(1.5, LorentzMeasure(0.5), t_max=200.0, tol=1e-8)
    parallel = integrate_lorentz(
        1.5, LorentzMeasure(0.5), t_max=200.0, tol=1e-8, workers=4
    )
    assert serial.value == parallel.value
    assert serial.error_estimate == parallel.error_estimate
    assert serial.panels == parallel.panels
    assert serial.tail_estimate == parallel.tail_estimate

    s2 = integrate_theta_form(1.5, 0.5, tol=1e-8)
    p2 = integrate_theta_form(1.5, 0.5, tol=1e-8, workers=4)
    assert s2.value == p2.value
    assert s2.error_estimate == p2.error_estimate
