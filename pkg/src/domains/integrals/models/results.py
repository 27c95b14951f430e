"""
Outcome of a numeric identity check
"""

from dataclasses import dataclass
from typing import Any, Dict


@dataclass
class IdentityCheck:
    """Two sides of an identity, their relative residual and the quadrature error carried into it"""
    residual: float
    lhs: complex
    rhs: complex
    err_est: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for reports"""
        return {
            "residual": self.residual,
            "lhs": [self.lhs.real, self.lhs.imag],
            "rhs": [self.rhs.real, self.rhs.imag],
            "err_est": self.err_est,
        }
