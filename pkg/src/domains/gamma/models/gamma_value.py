"""
Gamma-type evaluation results
"""

from dataclasses import dataclass
from typing import Any, Dict


@dataclass(frozen=True)
class GammaValue:
    """Value of a gamma-type function with its propagated truncation bound"""
    value: complex
    est_error: float = 0.0

    def __post_init__(self):
        if self.est_error < 0:
            raise ValueError("est_error cannot be negative")

    def __complex__(self) -> complex:
        return complex(self.value)

    def __mul__(self, other: "GammaValue") -> "GammaValue":
        value = self.value * other.value
        return GammaValue(value, abs(value) * (self.relative_error + other.relative_error))

    @property
    def relative_error(self) -> float:
        if self.value == 0:
            return self.est_error
        return self.est_error / abs(self.value)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for reports"""
        return {
            "value": [self.value.real, self.value.imag],
            "est_error": self.est_error,
        }
