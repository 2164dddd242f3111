"""Exception types shared across the package."""


class FrobkitError(Exception):
    """Base class for all library errors."""


class RootFindingError(FrobkitError):
    """Polynomial root iteration failed to reach the requested residual."""

    def __init__(self, message: str, best_residual: float = float("nan")):
        super().__init__(message)
        self.best_residual = best_residual


class DegenerateConfigurationError(FrobkitError):
    """Inputs sit on (or too close to) a geometric degeneracy.

    The message names the coincidence, e.g. which roots coalesce or
    which denominator vanishes.
    """


class CoordinateChartError(FrobkitError):
    """Newton inversion of the canonical-coordinate chart failed."""


class BranchError(FrobkitError):
    """Evaluation requested at (or across) a branch point."""


class UnsupportedPotentialError(FrobkitError):
    """Potential family outside the implemented parameter range."""
