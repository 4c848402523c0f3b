"""Structured pass/fail records for numerical checks."""

from dataclasses import dataclass, field
from types import MappingProxyType


@dataclass(frozen=True)
class VerificationReport:
    """One named check: pass flag, worst absolute error, tolerance, details.

    ``passed`` is always equivalent to ``max_abs_error <= tolerance``;
    structural failures (wrong counts, missing gaps) are encoded by the
    check as a penalty error of 1.0 with an explanatory detail entry.
    """

    check: str
    dimension: int
    passed: bool
    max_abs_error: float
    tolerance: float
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed != (self.max_abs_error <= self.tolerance):
            raise ValueError("passed flag inconsistent with error/tolerance")
        object.__setattr__(self, "details", MappingProxyType(dict(self.details)))

    @classmethod
    def from_error(cls, check, dimension, max_abs_error, tolerance, details=None):
        return cls(
            check=check,
            dimension=dimension,
            passed=max_abs_error <= tolerance,
            max_abs_error=float(max_abs_error),
            tolerance=float(tolerance),
            details=details or {},
        )

    def to_record(self):
        """Plain dict with the stable field order used by every output format."""
        return {
            "check": self.check,
            "dimension": self.dimension,
            "passed": self.passed,
            "max_abs_error": self.max_abs_error,
            "tolerance": self.tolerance,
            "details": dict(self.details),
        }
