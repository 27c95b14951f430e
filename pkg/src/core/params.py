"""
Parameter types shared by every evaluator

BasePair holds the two nomes of an elliptic object, OmegaTriple the three
quasi-periods with their derived nomes, TruncationPolicy the accuracy
contract for infinite products and sums. All three are immutable.
"""

import cmath
import math
from dataclasses import dataclass
from typing import Tuple

from core.config import get_config
from core.errors import DegenerateLatticeError, DomainViolationError

TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class TruncationPolicy:
    """Tolerance and term cap governing all truncated products and sums"""
    tol: float = 1e-15
    max_terms: int = 4096
    zero_snap: float = 1e-13
    pole_snap: float = 1e-12
    log_sum_threshold: int = 200

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainViolationError("truncation tol must be positive", bound=0.0)
        if self.max_terms < 8:
            raise DomainViolationError(f"max_terms={self.max_terms} below minimum", bound=8)

    @classmethod
    def from_config(cls) -> "TruncationPolicy":
        precision = get_config().precision
        return cls(
            tol=precision.product_tol,
            max_terms=precision.max_terms,
            zero_snap=precision.zero_snap,
            pole_snap=precision.pole_snap,
            log_sum_threshold=precision.log_sum_threshold,
        )


def default_policy() -> TruncationPolicy:
    return TruncationPolicy.from_config()


@dataclass(frozen=True)
class BasePair:
    """The two nomes p, q; inverted_q marks the |q| > 1 regime"""
    p: complex
    q: complex
    inverted_q: bool = False

    @property
    def pq(self) -> complex:
        return self.p * self.q

    def swapped(self) -> "BasePair":
        """Exchange the roles of p and q (both must be in the standard regime)"""
        return make_base_pair(self.q, self.p)


def make_base_pair(p: complex, q: complex) -> BasePair:
    """
    Validate a pair of nomes

    Raises:
        DomainViolationError: if |p| >= 1, q == 0 or |q| == 1
    """
    p = complex(p)
    q = complex(q)
    if abs(p) >= 1:
        raise DomainViolationError("nome p must satisfy |p| < 1", location=p, bound=1.0)
    if q == 0:
        raise DomainViolationError("nome q must be nonzero", location=q, bound=0.0)
    if abs(q) == 1:
        raise DomainViolationError("nome q on the unit circle has no product representation", location=q, bound=1.0)
    return BasePair(p=p, q=q, inverted_q=abs(q) > 1)


@dataclass(frozen=True)
class OmegaTriple:
    """Quasi-periods ω1, ω2, ω3 with derived moduli and nomes"""
    omega1: complex
    omega2: complex
    omega3: complex
    tau1: complex
    tau2: complex
    tau3: complex

    @property
    def omegas(self) -> Tuple[complex, complex, complex]:
        return (self.omega1, self.omega2, self.omega3)

    # Nomes
    @property
    def q(self) -> complex:
        return cmath.exp(TWO_PI_I * self.tau1)

    @property
    def p(self) -> complex:
        return cmath.exp(TWO_PI_I * self.tau2)

    @property
    def r(self) -> complex:
        return cmath.exp(TWO_PI_I * self.tau3)

    # Modular partners
    @property
    def q_tilde(self) -> complex:
        return cmath.exp(-TWO_PI_I / self.tau1)

    @property
    def p_tilde(self) -> complex:
        return cmath.exp(-TWO_PI_I / self.tau2)

    @property
    def r_tilde(self) -> complex:
        return cmath.exp(-TWO_PI_I / self.tau3)

    def nome(self, name: str) -> complex:
        return getattr(self, name)

    def require_below_one(self, *names: str) -> None:
        """Raise DomainViolation unless every named derived nome lies inside the unit disc"""
        for name in names:
            value = self.nome(name)
            if not abs(value) < 1:
                raise DomainViolationError(f"derived nome {name} must satisfy |{name}| < 1", location=value, bound=1.0)


def _near_integer(value: complex, guard: float) -> bool:
    return abs(value - round(value.real)) * 2 * math.pi < guard


def make_omega_triple(omega1: complex, omega2: complex, omega3: complex) -> OmegaTriple:
    """
    Build an OmegaTriple and reject degenerate period lattices

    The incommensurability guard compares p^n with q^m (and r^n with q̃^m) in
    logarithmic form, n τ2 − m τ1 against the integers, so huge or tiny nomes
    never overflow.

    Raises:
        DomainViolationError: on a zero period
        DegenerateLatticeError: when p^n ≈ q^m for small |n|, |m|
    """
    omega1, omega2, omega3 = complex(omega1), complex(omega2), complex(omega3)
    for name, value in (("omega1", omega1), ("omega2", omega2), ("omega3", omega3)):
        if value == 0:
            raise DomainViolationError(f"{name} must be nonzero", location=value, bound=0.0)

    tau1 = omega1 / omega2
    tau2 = omega3 / omega2
    tau3 = tau2 / tau1
    if abs(tau3 - omega3 / omega1) > 1e-13 * max(1.0, abs(tau3)):
        raise DomainViolationError("modulus constraint tau3 = tau2/tau1 failed", location=tau3)

    precision = get_config().precision
    scan = precision.lattice_scan
    guard = precision.lattice_guard
    for n in range(-scan, scan + 1):
        for m in range(-scan, scan + 1):
            if n == 0 and m == 0:
                continue
            if _near_integer(n * tau2 - m * tau1, guard):
                raise DegenerateLatticeError(f"p^{n} coincides with q^{m}", location=complex(n * tau2 - m * tau1), bound=guard)
            if _near_integer(n * tau3 + m / tau1, guard):
                raise DegenerateLatticeError(f"r^{n} coincides with q_tilde^{m}", location=complex(n * tau3 + m / tau1), bound=guard)

    return OmegaTriple(omega1=omega1, omega2=omega2, omega3=omega3, tau1=tau1, tau2=tau2, tau3=tau3)
