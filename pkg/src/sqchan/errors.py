"""Exception types shared across the package."""


class SqchanError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SqchanError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class BracketError(SqchanError, ValueError):
    """A root bracket whose endpoints do not straddle a sign change."""


class IntegrationError(SqchanError, RuntimeError):
    """Adaptive quadrature hit its refinement depth before reaching tolerance.

    Carries the best available estimate and an error bound so callers can
    decide whether the partial result is usable.
    """

    def __init__(self, message: str, estimate: float, error_bound: float):
        super().__init__(f"{message} (estimate={estimate!r}, error_bound={error_bound!r})")
        self.estimate = estimate
        self.error_bound = error_bound


class ConvergenceError(SqchanError, RuntimeError):
    """An iterative solver exhausted its iteration budget."""


class InfeasibleEnergyError(SqchanError, ValueError):
    """Channel parameters demand more energy than the budget provides."""


class ZeroAmplitudeError(SqchanError, ValueError):
    """Operation undefined for a blank channel (zero signal amplitude)."""


class VerificationError(SqchanError, RuntimeError):
    """A closed-form result disagreed with its independent numerical check."""
