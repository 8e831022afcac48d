"""Exception and warning types shared across the package."""


class RotameniscusError(Exception):
    """Base class for all numerical and domain errors raised by this package."""


class SupercriticalError(RotameniscusError):
    """Rotation parameter at or beyond the critical value; no steady shape exists."""


class SingularPointError(RotameniscusError):
    """Evaluation requested exactly at a non-integrable singular point."""


class DomainError(RotameniscusError):
    """Input outside the mathematical domain of the operation."""


class QuadratureError(RotameniscusError):
    """Adaptive quadrature failed to meet the requested tolerance."""


class ExtrapolationError(RotameniscusError):
    """Limit extrapolation did not stabilize."""


class NonConvergenceError(RotameniscusError):
    """Iterative summation failed to meet its tail bound within the cap."""


class DivergenceWarning(UserWarning):
    """Series evaluated at or beyond its radius of convergence."""


class ConditioningWarning(UserWarning):
    """Requested working precision is likely insufficient for the solve."""
