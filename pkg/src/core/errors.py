"""
Error taxonomy shared by every evaluator

Every failure carries the offending input and the bound it violated so that
callers (and the CLI exit-code mapping) never have to parse messages.
"""

from enum import Enum
from typing import Any, Dict, Optional


class ErrorKind(str, Enum):
    """Failure categories of numerical evaluation"""
    POLE_PROXIMITY = "PoleProximity"
    NON_CONVERGENCE = "NonConvergence"
    DOMAIN_VIOLATION = "DomainViolation"
    DEGENERATE_LATTICE = "DegenerateLattice"


class EvalError(Exception):
    """Base class for evaluation failures"""

    kind: ErrorKind = ErrorKind.DOMAIN_VIOLATION

    def __init__(self, detail: str, location: Optional[complex] = None, bound: Optional[float] = None):
        self.detail = detail
        self.location = location
        self.bound = bound
        message = detail
        if location is not None:
            message += f" (at {location})"
        if bound is not None:
            message += f" [bound {bound:g}]"
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for reports"""
        result: Dict[str, Any] = {"kind": self.kind.value, "detail": self.detail}
        if self.location is not None:
            result["location"] = [complex(self.location).real, complex(self.location).imag]
        if self.bound is not None:
            result["bound"] = self.bound
        return result


class PoleProximityError(EvalError):
    kind = ErrorKind.POLE_PROXIMITY


class NonConvergenceError(EvalError):
    kind = ErrorKind.NON_CONVERGENCE


class DomainViolationError(EvalError):
    kind = ErrorKind.DOMAIN_VIOLATION


class DegenerateLatticeError(EvalError):
    kind = ErrorKind.DEGENERATE_LATTICE


EXIT_OK = 0
EXIT_CHECK_FAILED = 1

EXIT_CODES = {
    ErrorKind.DOMAIN_VIOLATION: 2,
    ErrorKind.DEGENERATE_LATTICE: 2,
    ErrorKind.POLE_PROXIMITY: 3,
    ErrorKind.NON_CONVERGENCE: 4,
}


def exit_code_for(error: EvalError) -> int:
    """Map an evaluation error to the CLI exit code"""
    return EXIT_CODES[error.kind]
