"""
Certificates and direct evaluation of elliptic hypergeometric terms
"""

import logging
from typing import Optional, Sequence

import numpy as np

from core.config import get_config
from core.errors import DomainViolationError, PoleProximityError
from core.params import BasePair, TruncationPolicy, default_policy
from domains.gamma.services.elliptic_gamma import ell_gamma_array
from domains.terms.models.term_spec import Certificate, CertificateFactor, IntVector, TermSpec
from domains.theta.services.theta_service import theta_pochhammer

logger = logging.getLogger(__name__)


def certificate_along(t: TermSpec, direction: IntVector) -> Certificate:
    """
    h_d(x) = Δ(x q^d)/Δ(x) = ∏_a θ_p((pq)^σ x^m; q)_{m·d}^ε

    Raises:
        DomainViolationError: when shifting by q^d leaves the balancing surface
    """
    direction = tuple(int(d) for d in direction)
    if len(direction) != t.n:
        raise DomainViolationError(f"direction has length {len(direction)}, expected {t.n}")
    if not t.is_admissible_direction(direction):
        raise DomainViolationError(f"direction {direction} violates a balancing condition of '{t.name}'")
    factors = tuple(
        CertificateFactor(m=f.m, sigma=f.sigma, length=f.shift_length(direction), eps=f.eps)
        for f in t.factors
        if f.shift_length(direction) != 0
    )
    return Certificate(direction=direction, factors=factors)


def certificate(t: TermSpec, i: int) -> Certificate:
    """q-certificate in the single variable x_i"""
    return certificate_along(t, t.unit(i))


def balanced_direction(t: TermSpec, i: int) -> IntVector:
    """
    Unit shift of a free variable x_i, compensated on the solved variable of
    every constraint it enters so that the shift stays on the balancing surface
    """
    if i not in t.free_variables:
        raise DomainViolationError(f"variable {t.variables[i]} is eliminated by a constraint")
    direction = list(t.unit(i))
    for constraint in t.constraints:
        coefficient = constraint.c[i]
        if coefficient:
            direction[constraint.solve] -= coefficient * constraint.c[constraint.solve]
    return tuple(direction)


def monomial(x: Sequence[complex], m: IntVector, sigma: int, pq: complex) -> complex:
    """(pq)^σ x^m"""
    value = complex(pq) ** sigma if sigma else 1.0 + 0.0j
    for xl, ml in zip(x, m):
        if ml:
            value *= complex(xl) ** ml
    return value


def eval_certificate(
    c: Certificate, x: Sequence[complex], base: BasePair, policy: Optional[TruncationPolicy] = None
) -> complex:
    """
    Numeric value of a certificate at the point x

    Raises:
        PoleProximityError: when a denominator theta factor vanishes
    """
    policy = policy or default_policy()
    value = 1.0 + 0.0j
    for f in c.factors:
        factorial = theta_pochhammer(monomial(x, f.m, f.sigma, base.pq), base.q, base.p, f.length, policy)
        if factorial == 0 and f.eps < 0:
            raise PoleProximityError("certificate denominator vanishes", location=monomial(x, f.m, f.sigma, base.pq))
        value *= factorial ** f.eps
    return value


def eval_term(t: TermSpec, x: Sequence[complex], base: BasePair, policy: Optional[TruncationPolicy] = None) -> complex:
    """
    Δ(x) = ∏_a Γ_{p,q}((pq)^σ x^m)^ε through direct elliptic gamma evaluation

    Raises:
        PoleProximityError: at a pole of a numerator factor or a zero of a denominator factor
    """
    policy = policy or default_policy()
    if len(x) != t.n:
        raise DomainViolationError(f"point has {len(x)} coordinates, expected {t.n}")
    if not t.factors:
        return 1.0 + 0.0j
    args = np.array([monomial(x, f.m, f.sigma, base.pq) for f in t.factors], dtype=np.complex128)
    values = ell_gamma_array(args, base, policy)
    eps = np.array([f.eps for f in t.factors])
    vanishing = (values == 0) & (eps < 0)
    if np.any(vanishing):
        raise PoleProximityError("denominator gamma factor vanishes", location=complex(args[vanishing][0]))
    return complex(np.prod(values ** eps))


def sample_point(
    t: TermSpec,
    base: BasePair,
    rng: np.random.Generator,
    low: Optional[float] = None,
    high: Optional[float] = None,
) -> np.ndarray:
    """
    Random point on the balancing surface: free variables get moduli in
    [low, high] and uniform phases, solved variables follow from x^c = (pq)^k
    """
    verify_config = get_config().verify
    low = verify_config.modulus_low if low is None else low
    high = verify_config.modulus_high if high is None else high

    x = rng.uniform(low, high, t.n) * np.exp(1j * rng.uniform(0.0, 2 * np.pi, t.n))
    for constraint in t.constraints:
        s = constraint.solve
        rest = complex(base.pq) ** constraint.k
        for l, cl in enumerate(constraint.c):
            if l != s and cl:
                rest /= complex(x[l]) ** cl
        # c_s = ±1
        x[s] = rest ** constraint.c[s]
    return x


def check_balancing(t: TermSpec, x: Sequence[complex], base: BasePair) -> float:
    """Largest relative deviation |x^c − (pq)^k| / |(pq)^k| over all constraints"""
    worst = 0.0
    for constraint in t.constraints:
        target = complex(base.pq) ** constraint.k
        worst = max(worst, abs(monomial(x, constraint.c, 0, base.pq) - target) / abs(target))
    return worst
