"""Exception types shared across the library."""

from __future__ import annotations


class ZetaFieldError(Exception):
    """Base class for all computational errors raised by this package."""


class PoleAtOne(ZetaFieldError):
    """Evaluation requested within the guard radius of the pole at s = 1."""


class OutOfDomain(ZetaFieldError):
    """Argument lies outside the validity region of the requested operation."""


class NoConvergence(ZetaFieldError):
    """The series engine cannot meet the tolerance within its term cap."""


class CapacityExceeded(ZetaFieldError):
    """A sieve or table request exceeds the documented size limit."""


class ToleranceNotReached(ZetaFieldError):
    """Adaptive refinement exhausted its panel budget above tolerance."""


class DivergentAtBoundary(ZetaFieldError):
    """Closed form diverges at the requested parameter value."""


class NoBracket(ZetaFieldError):
    """Root bracketing failed; the target value is outside the reachable range."""


class InvalidFigure(ZetaFieldError):
    """Requested figure id does not exist."""
