"""
Exception hierarchy for perception-control solving.
"""

from typing import List, Optional


class PerceptionControlError(Exception):
    """Base class for every error raised by this package."""


class InstanceError(PerceptionControlError, ValueError):
    """An instance (or a position handed to it) violates the model invariants."""


class InstanceFileError(InstanceError):
    """Instance document could not be parsed; carries the offending line when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class UnsupportedInstanceError(PerceptionControlError):
    """Solver refuses the instance, either outside its preconditions or beyond a practical cap."""

    def __init__(self, reason: str, hardness: Optional[str] = None):
        self.reason = reason
        self.hardness = hardness
        message = reason if not hardness else f"{reason} ({hardness})"
        super().__init__(message)


class SolverTimeoutError(PerceptionControlError):
    """Cooperative deadline expired inside a solver or oracle."""


class SphereConditioningError(PerceptionControlError):
    """Sphere subset system solved with a residual above tolerance."""

    def __init__(self, residual: float, tolerance: float):
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(f"sphere system residual {residual:.3e} exceeds tolerance {tolerance:.1e}")


class ParameterSearchError(PerceptionControlError):
    """Reduction gadget parameters could not be found with the required margin."""


class MalformedWitnessError(PerceptionControlError, ValueError):
    """Witness coordinate lies outside every snap band of a reduction decoder."""


class CertificationError(PerceptionControlError):
    """Raised by require_certified when a witness fails verification."""

    def __init__(self, failures: List[str]):
        self.failures = failures
        super().__init__(f"witness failed certification: {', '.join(failures)}")
