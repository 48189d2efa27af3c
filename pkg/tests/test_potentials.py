"""Closed-form potentials, their numeric counterparts, and the field values.

Frozen references in this file were computed with mpmath at 50 digits:
log(zeta(1.5)/2), log zeta(2), log zeta(4), the alpha = 1 value of the
squared-kernel potential, and zeta'(2)/zeta(2).
"""

import math

import numpy as np
import pytest

from zetafield import (
    EULER_GAMMA,
    DivergentAtBoundary,
    OutOfDomain,
    PoleAtOne,
    PotentialReport,
    QuadratureResult,
    electric_field,
    log_zeta_residue,
    phi1_closed,
    phi1_report,
    phi2_closed,
    phi2_report,
    phi_report,
    remark_closed,
    remark_potential,
)

_LOG_ZETA_2 = 0.4977003024707453
_LOG_ZETA_4 = 0.07910987306733563
_LOG_HALF_ZETA_15 = 0.2671127221708399
_PHI2_AT_ONE = 0.5653615980360235
_ZETA_RATIO_2 = -0.5699609930945328


def test_log_zeta_residue_values():
    # log(zeta(3) * 2): log zeta(3) + log 2
    expected = 0.18403417539149142 + math.log(2.0)
    assert abs(log_zeta_residue(3.0) - expected) <= 1e-12
    # continuous through the pole with value 0, linear slope gamma nearby
    assert log_zeta_residue(1.0) == 0.0
    assert log_zeta_residue(1.0 + 5e-9) == 0.0
    assert abs(log_zeta_residue(1.0 + 1e-6) - EULER_GAMMA * 1e-6) <= 1e-9
    # positive ray also left of the pole
    assert math.isfinite(log_zeta_residue(0.75))


@pytest.mark.parametrize("x", [0.5, 0.3, -1.0, math.inf])
def test_log_zeta_residue_domain(x):
    with pytest.raises(OutOfDomain):
        log_zeta_residue(x)


@pytest.mark.parametrize("alpha", [0.1, 0.3, 0.49])
def test_phi1_closed_vanishes_inside(alpha):
    assert phi1_closed(alpha) == 0.0


def test_phi1_closed_outside_values():
    assert abs(phi1_closed(1.0) - _LOG_ZETA_2) <= 1e-12
    assert abs(phi1_closed(0.75) - _LOG_HALF_ZETA_15) <= 1e-12


def test_phi2_closed_values():
    assert abs(phi2_closed(0.25) - -2.0 * EULER_GAMMA) <= 1e-15
    assert abs(phi2_closed(0.4) - -5.0 * EULER_GAMMA) <= 1e-14
    assert abs(phi2_closed(1.0) - _PHI2_AT_ONE) <= 1e-12


@pytest.mark.parametrize("fn", [phi1_closed, phi2_closed, electric_field])
@pytest.mark.parametrize("alpha", [0.5, 0.4999999, 0.5000005])
def test_closed_forms_refuse_the_boundary(fn, alpha):
    with pytest.raises(DivergentAtBoundary):
        if fn is electric_field:
            fn(alpha, "d_alpha")
        else:
            fn(alpha)


@pytest.mark.parametrize("alpha", [0.0, -0.2, math.nan])
def test_closed_forms_refuse_nonpositive_alpha(alpha):
    with pytest.raises(OutOfDomain):
        phi1_closed(alpha)


def test_electric_field_values():
    assert electric_field(0.25, "d_alpha") == 4.0
    assert electric_field(0.25, "d_rho") == EULER_GAMMA + 2.0
    assert abs(electric_field(1.0, "d_alpha") - 2.0 * _ZETA_RATIO_2) <= 1e-12
    assert abs(electric_field(1.0, "d_rho") - _ZETA_RATIO_2) <= 1e-13
    with pytest.raises(OutOfDomain):
        electric_field(0.25, "gradient")


def test_field_is_derivative_of_inside_potential():
    h = 1e-5
    curve = lambda a: -math.log1p(-2.0 * a)
    fd = (curve(0.3 + h) - curve(0.3 - h)) / (2.0 * h)
    assert abs(electric_field(0.3, "d_alpha") - fd) <= 1e-6


def test_field_is_derivative_of_outside_potential():
    from zetafield import zeta

    h = 1e-5
    curve = lambda a: math.log(zeta(complex(2.0 * a, 0.0)).real)
    fd = (curve(1.0 + h) - curve(1.0 - h)) / (2.0 * h)
    assert abs(electric_field(1.0, "d_alpha") - fd) <= 1e-6


def test_phi_report_outside_strip():
    report = phi_report(2.0, 1.0, t_max=300.0, tol=1e-7)
    assert report.name == "phi"
    assert report.alpha == 1.5
    assert report.rho == 2.0 and report.rho0 == 1.0
    assert report.residual == report.numeric - report.closed
    assert abs(report.residual) <= report.quadrature.total_error
    # closed side: log(zeta(3) * 2) - log(1 + 1)
    assert abs(report.closed - 0.18403417539149142) <= 1e-12


def test_phi_report_inside_strip_with_residue_limit():
    # rho + rho0 = 1 lands on the removable point, leaving -log(0.6)
    report = phi_report(0.7, 0.3, t_max=200.0, tol=1e-6)
    assert abs(report.closed - -math.log(0.6)) <= 1e-15
    assert abs(report.residual) <= report.quadrature.total_error


def test_phi_report_domain_checks():
    with pytest.raises(OutOfDomain):
        phi_report(0.5, 0.5)
    with pytest.raises(OutOfDomain):
        phi_report(2.0, 0.0)


def test_remark_closed_values_and_continuity():
    assert abs(remark_closed(0.75) - _LOG_HALF_ZETA_15) <= 1e-12
    assert abs(remark_closed(2.0) - _LOG_ZETA_4) <= 1e-12
    # both branches approach log zeta(2) at rho = 1
    left = remark_closed(1.0 - 1e-6)
    right = remark_closed(1.0 + 1e-6)
    assert abs(left - _LOG_ZETA_2) <= 3e-6
    assert abs(right - _LOG_ZETA_2) <= 3e-6
    with pytest.raises(PoleAtOne):
        remark_closed(1.0)
    with pytest.raises(PoleAtOne):
        remark_closed(1.0 + 5e-9)
    with pytest.raises(OutOfDomain):
        remark_closed(0.5)


def test_remark_potential_report():
    report = remark_potential(1.5, t_max=300.0, tol=1e-6)
    assert report.name == "remark"
    assert report.rho0 == report.rho == 1.5
    assert abs(report.residual) <= report.quadrature.total_error


def test_phi1_report_branches():
    inside = phi1_report(0.25, t_max=300.0, tol=1e-6)
    assert inside.closed == 0.0
    assert abs(inside.numeric) <= inside.quadrature.total_error
    assert inside.rho == 0.75 and inside.rho0 == 0.25

    outside = phi1_report(0.75, t_max=300.0, tol=1e-6)
    assert abs(outside.closed - _LOG_HALF_ZETA_15) <= 1e-12
    assert abs(outside.residual) <= outside.quadrature.total_error


def test_phi2_report_branches():
    inside = phi2_report(0.25)
    assert abs(inside.closed - -2.0 * EULER_GAMMA) <= 1e-15
    assert abs(inside.residual) <= inside.quadrature.total_error

    outside = phi2_report(1.0)
    assert abs(outside.closed - _PHI2_AT_ONE) <= 1e-12
    assert abs(outside.residual) <= outside.quadrature.total_error


def test_potential_report_validation():
    quad = QuadratureResult(
        value=1.0, error_estimate=0.0, panels=1, truncation_t=1.0, tail_estimate=0.0
    )
    with pytest.raises(OutOfDomain):
        PotentialReport(
            name="phi",
            alpha=1.0,
            rho=1.5,
            rho0=0.5,
            numeric=1.0,
            closed=0.5,
            residual=0.4,  # must equal numeric - closed
            quadrature=quad,
        )
    with pytest.raises(OutOfDomain):
        PotentialReport(
            name="psi",
            alpha=1.0,
            rho=1.5,
            rho0=0.5,
            numeric=1.0,
            closed=0.5,
            residual=0.5,
            quadrature=quad,
        )
