"""
Terms domain models

A TermSpec describes Δ(x) = ∏_a Γ_{p,q}((pq)^{σ_a} x^{m_a})^{ε_a} over n
multiplicative variables, optionally restricted by balancing constraints
x^c = (pq)^k. All exponents are exact integers.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from core.errors import DomainViolationError

IntVector = Tuple[int, ...]


def _as_int_vector(values, length: int, what: str) -> IntVector:
    vector = tuple(int(v) for v in values)
    if any(int(v) != v for v in values):
        raise DomainViolationError(f"{what} must be integers")
    if len(vector) != length:
        raise DomainViolationError(f"{what} has length {len(vector)}, expected {length}")
    return vector


def dot(a: IntVector, b: IntVector) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class TermFactor:
    """Γ_{p,q}((pq)^sigma x^m)^eps"""
    m: IntVector
    eps: int
    sigma: int = 0

    def shift_length(self, direction: IntVector) -> int:
        return dot(self.m, direction)


@dataclass(frozen=True)
class Constraint:
    """Balancing condition x^c = (pq)^k, solved for variable `solve`"""
    c: IntVector
    k: int
    solve: int


@dataclass(frozen=True)
class TermSpec:
    """Immutable description of an elliptic hypergeometric term"""
    n: int
    factors: Tuple[TermFactor, ...]
    constraints: Tuple[Constraint, ...] = ()
    variables: Tuple[str, ...] = ()
    name: str = "term"

    def __post_init__(self):
        if self.n < 0:
            raise DomainViolationError(f"number of variables must be nonnegative, got {self.n}")
        factors = []
        for index, factor in enumerate(self.factors):
            if factor.eps == 0:
                raise DomainViolationError(f"factor {index} has multiplicity 0")
            factors.append(
                TermFactor(
                    m=_as_int_vector(factor.m, self.n, f"exponent vector of factor {index}"),
                    eps=int(factor.eps),
                    sigma=int(factor.sigma),
                )
            )
        object.__setattr__(self, "factors", tuple(factors))

        constraints = []
        for index, constraint in enumerate(self.constraints):
            c = _as_int_vector(constraint.c, self.n, f"constraint {index}")
            if not 0 <= constraint.solve < self.n or abs(c[constraint.solve]) != 1:
                raise DomainViolationError(f"constraint {index} must solve for a variable with coefficient +-1")
            constraints.append(Constraint(c=c, k=int(constraint.k), solve=int(constraint.solve)))
        for index, constraint in enumerate(constraints):
            for other_index, other in enumerate(constraints):
                if other_index != index and other.c[constraint.solve] != 0:
                    raise DomainViolationError(
                        f"solved variable {constraint.solve} of constraint {index} also appears in constraint {other_index}"
                    )
        object.__setattr__(self, "constraints", tuple(constraints))

        if not self.variables:
            object.__setattr__(self, "variables", tuple(f"x{i + 1}" for i in range(self.n)))
        elif len(self.variables) != self.n:
            raise DomainViolationError(f"{len(self.variables)} variable names for {self.n} variables")

    @property
    def K(self) -> int:
        return len(self.factors)

    @property
    def is_pure(self) -> bool:
        """True when no factor carries a power of pq"""
        return all(f.sigma == 0 for f in self.factors)

    @property
    def total_multiplicity(self) -> int:
        return sum(f.eps for f in self.factors)

    @property
    def free_variables(self) -> List[int]:
        solved = {c.solve for c in self.constraints}
        return [i for i in range(self.n) if i not in solved]

    def unit(self, i: int) -> IntVector:
        if not 0 <= i < self.n:
            raise DomainViolationError(f"variable index {i} outside 0..{self.n - 1}")
        return tuple(1 if j == i else 0 for j in range(self.n))

    def is_admissible_direction(self, direction: IntVector) -> bool:
        """Shifting by q^d keeps every balancing condition"""
        return all(dot(c.c, direction) == 0 for c in self.constraints)

    def with_factor_flipped(self, index: int) -> "TermSpec":
        """Copy of the term with the sign of one multiplicity reversed"""
        factors = list(self.factors)
        f = factors[index]
        factors[index] = TermFactor(m=f.m, eps=-f.eps, sigma=f.sigma)
        return TermSpec(
            n=self.n, factors=tuple(factors), constraints=self.constraints,
            variables=self.variables, name=f"{self.name}-flip{index}",
        )


@dataclass(frozen=True)
class CertificateFactor:
    """θ_p((pq)^sigma x^m; q)_length^eps"""
    m: IntVector
    sigma: int
    length: int
    eps: int


@dataclass(frozen=True)
class Certificate:
    """h_d(x) = Δ(x q^d)/Δ(x) as a product of elliptic shifted factorials"""
    direction: IntVector
    factors: Tuple[CertificateFactor, ...]

    @property
    def variable(self) -> Optional[int]:
        """Index of the shifted variable for a unit direction"""
        nonzero = [i for i, d in enumerate(self.direction) if d != 0]
        if len(nonzero) == 1 and self.direction[nonzero[0]] == 1:
            return nonzero[0]
        return None


@dataclass(frozen=True)
class ShiftTransform:
    """x_l → p^{e_l} x_l, together with q → pq when q_to_pq is set"""
    p_shifts: IntVector
    q_to_pq: bool = False

    def is_balanced(self, term: TermSpec) -> bool:
        flag = 1 if self.q_to_pq else 0
        return all(dot(c.c, self.p_shifts) == c.k * flag for c in term.constraints)


@dataclass
class EllipticityReport:
    """Outcome of the exact Diophantine check"""
    cubic_ok: bool = True
    quadratic_ok: bool = True
    linear_ok: bool = True
    violations: List[Tuple[Tuple[int, ...], int]] = field(default_factory=list)
    n: int = 0
    K: int = 0

    @property
    def passed(self) -> bool:
        return self.cubic_ok and self.quadratic_ok and self.linear_ok

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for reports"""
        return {
            "n": self.n,
            "K": self.K,
            "cubic_ok": self.cubic_ok,
            "quadratic_ok": self.quadratic_ok,
            "linear_ok": self.linear_ok,
            "passed": self.passed,
            "violations": [{"indices": list(idx), "sum": total} for idx, total in self.violations],
        }
