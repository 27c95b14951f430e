"""
Quadrature domain models
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Sequence, Tuple

import numpy as np

from core.errors import DomainViolationError

# Receives one open-grid array of points z_j = e^{iφ_j} per dimension
# (shapes broadcast to (N,)*n) and returns the integrand values.
GridEvaluator = Callable[[Sequence[np.ndarray]], np.ndarray]


@dataclass(frozen=True)
class PoleFamily:
    """
    Poles at z^exponents = anchor · p^{∓j} q^{∓k}, j, k ≥ 0

    An inward family shrinks from the anchor towards 0 and must stay inside
    the unit circle; an outward family grows from the anchor and must stay
    outside.
    """
    exponents: Tuple[int, ...]
    anchor: complex
    outward: bool
    label: str = ""

    def members(self, p: complex, q: complex, scan: int) -> np.ndarray:
        """Lattice points with 0 <= j, k <= scan"""
        points = []
        for j in range(scan + 1):
            for k in range(scan + 1):
                step = complex(p) ** j * complex(q) ** k
                if step == 0:
                    continue
                points.append(self.anchor / step if self.outward else self.anchor * step)
        return np.array(points, dtype=np.complex128)


@dataclass
class TorusIntegrand:
    """Integrand on T^n with its declared pole lattice"""
    dimension: int
    evaluate: GridEvaluator
    poles: List[PoleFamily] = field(default_factory=list)
    p: complex = 0j
    q: complex = 0j
    label: str = "integrand"

    def __post_init__(self):
        if not 1 <= self.dimension <= 3:
            raise DomainViolationError(f"torus dimension must be 1, 2 or 3, got {self.dimension}")


@dataclass
class QuadratureResult:
    """Trapezoid value on the torus with its doubling error estimate"""
    value: complex
    err_est: float
    N: int
    evaluations: int
    history: List[float] = field(default_factory=list)

    def scaled(self, factor: complex) -> "QuadratureResult":
        """Result multiplied by a constant prefactor"""
        return QuadratureResult(
            value=self.value * factor,
            err_est=self.err_est * abs(factor),
            N=self.N,
            evaluations=self.evaluations,
            history=[e * abs(factor) for e in self.history],
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for reports"""
        return {
            "value": [self.value.real, self.value.imag],
            "err_est": self.err_est,
            "N": self.N,
            "evaluations": self.evaluations,
        }


def constant_result(value: complex = 1.0 + 0.0j) -> QuadratureResult:
    """Result of a rank-0 integral"""
    return QuadratureResult(value=complex(value), err_est=0.0, N=0, evaluations=0)
