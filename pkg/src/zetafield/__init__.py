"""Lorentz-weighted potentials of log |zeta| along vertical lines.

The package evaluates zeta from an accelerated alternating series,
integrates log |zeta| against Cauchy kernels with explicit truncation
and tail accounting, compares the numeric potentials with their
closed forms, and solves the equal-potential pairing between lines
inside and outside the critical strip.
"""

from .errors import (
    CapacityExceeded,
    DivergentAtBoundary,
    InvalidFigure,
    NoBracket,
    NoConvergence,
    OutOfDomain,
    PoleAtOne,
    ToleranceNotReached,
    ZetaFieldError,
)
from .experiment import REFERENCE, ComparisonRow, ExperimentResult, run_experiment
from .figures import FigureData, FigureSeries, figure_series
from .output import (
    OutputRecord,
    figure_from_csv,
    figure_to_csv,
    record_from_csv,
    record_from_json,
    record_to_csv,
    record_to_json,
)
from .potentials import (
    PotentialReport,
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
from .quadrature import (
    IdentityCheck,
    LorentzMeasure,
    QuadratureResult,
    integrate_lorentz,
    integrate_theta_form,
    log_linear_identity,
)
from .symmetry import (
    AlphaEstimate,
    SweepPoint,
    SymmetryPair,
    SymmetryResidual,
    alpha_from_alpha_prime,
    solve_alpha_prime,
    sweep_symmetry,
    symmetry_residual,
)
from .validate import CheckResult, SUITE_NAMES, run_suite
from .zeta import (
    EULER_GAMMA,
    EvalOptions,
    InverseZetaPartials,
    inverse_zeta_partials,
    log_abs_zeta,
    log_abs_zeta_batch,
    mobius_sieve,
    primes_up_to,
    zeta,
    zeta_log_derivative,
)
from .zeros import ZeroOrdinates

__version__ = "0.1.0"

__all__ = [
    "AlphaEstimate",
    "CapacityExceeded",
    "CheckResult",
    "ComparisonRow",
    "DivergentAtBoundary",
    "EULER_GAMMA",
    "EvalOptions",
    "ExperimentResult",
    "FigureData",
    "FigureSeries",
    "IdentityCheck",
    "InvalidFigure",
    "InverseZetaPartials",
    "LorentzMeasure",
    "NoBracket",
    "NoConvergence",
    "OutOfDomain",
    "OutputRecord",
    "PoleAtOne",
    "PotentialReport",
    "QuadratureResult",
    "REFERENCE",
    "SUITE_NAMES",
    "SweepPoint",
    "SymmetryPair",
    "SymmetryResidual",
    "ToleranceNotReached",
    "ZeroOrdinates",
    "ZetaFieldError",
    "alpha_from_alpha_prime",
    "electric_field",
    "figure_from_csv",
    "figure_series",
    "figure_to_csv",
    "integrate_lorentz",
    "integrate_theta_form",
    "inverse_zeta_partials",
    "log_abs_zeta",
    "log_abs_zeta_batch",
    "log_linear_identity",
    "log_zeta_residue",
    "mobius_sieve",
    "phi1_closed",
    "phi1_report",
    "phi2_closed",
    "phi2_report",
    "phi_report",
    "primes_up_to",
    "record_from_csv",
    "record_from_json",
    "record_to_csv",
    "record_to_json",
    "remark_closed",
    "remark_potential",
    "run_experiment",
    "run_suite",
    "solve_alpha_prime",
    "sweep_symmetry",
    "symmetry_residual",
    "zeta",
    "zeta_log_derivative",
]
