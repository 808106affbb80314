"""Exception types shared across the package."""


class MuskatError(Exception):
    """Base class for all package errors."""


class SelfIntersection(MuskatError):
    """A curve chord collapsed below the degeneracy threshold."""


class CurveContact(MuskatError):
    """The moving interface touched the fixed permeability curve."""


class NoConvergence(MuskatError):
    """An iterative procedure failed to converge.

    The best available estimate, when meaningful, is attached as
    ``best_estimate``.
    """

    def __init__(self, message, best_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate


class DegenerateParametrization(MuskatError):
    """|d_alpha z|^2 degenerated below the noise floor."""


class StepRejected(MuskatError):
    """A time step violated a configured geometry guard."""


class InsufficientData(MuskatError):
    """A series-based diagnostic received too few records."""


class ConfigError(MuskatError):
    """Run configuration failed validation."""
