"""
Modified elliptic gamma function G(u;ω)

Product representation (needs |p|, |q|, |q̃|, |r| < 1):

    G(u;ω) = Γ_{p,q}(e^{2πiu/ω2}) Γ_{q̃,r}(r e^{−2πiu/ω1})

Exponential representation (needs |r̃|, |p̃| < 1):

    G(u;ω) = e^{−(πi/3) B_{3,3}(u|ω)} Γ_{r̃,p̃}(e^{−2πiu/ω3})

Both are the normalized solution of

    f(u + ω1) = θ_p(e^{2πiu/ω2}) f(u)
    f(u + ω2) = θ_r(e^{2πiu/ω1}) f(u)
    f(u + ω3) = e^{−πi B_{2,2}(u|ω1,ω2)} f(u)

with f(Σω/2) = 1, so they coincide.
"""

import cmath
import logging
import math
from typing import Optional, Tuple

import numpy as np

from core.config import get_config
from core.errors import DegenerateLatticeError, DomainViolationError
from core.params import OmegaTriple, TruncationPolicy, default_policy, make_base_pair, make_omega_triple
from domains.gamma.models.gamma_value import GammaValue
from domains.gamma.services.bernoulli import bernoulli_B22, bernoulli_B33
from domains.gamma.services.elliptic_gamma import ell_gamma
from domains.gamma.services.hyperbolic_gamma import hyperbolic_gamma_product
from domains.theta.services.theta_service import theta

logger = logging.getLogger(__name__)

TWO_PI_I = 2j * math.pi

REPRESENTATIONS = ("product", "b33")


def modified_G_product(u: complex, omega: OmegaTriple, policy: Optional[TruncationPolicy] = None) -> GammaValue:
    """
    G(u;ω) through two elliptic gamma factors

    Raises:
        DomainViolationError: unless |p|, |q|, |q̃|, |r| < 1
    """
    policy = policy or default_policy()
    omega.require_below_one("p", "q", "q_tilde", "r")
    u = complex(u)
    first = ell_gamma(cmath.exp(TWO_PI_I * u / omega.omega2), make_base_pair(omega.p, omega.q), policy)
    second = ell_gamma(omega.r * cmath.exp(-TWO_PI_I * u / omega.omega1), make_base_pair(omega.q_tilde, omega.r), policy)
    return first * second


def modified_G_B33(u: complex, omega: OmegaTriple, policy: Optional[TruncationPolicy] = None) -> GammaValue:
    """
    G(u;ω) through the B_{3,3} exponential and one elliptic gamma factor

    Raises:
        DomainViolationError: unless |r̃|, |p̃| < 1
    """
    policy = policy or default_policy()
    omega.require_below_one("r_tilde", "p_tilde")
    u = complex(u)
    prefactor = cmath.exp(-1j * math.pi / 3 * bernoulli_B33(u, *omega.omegas))
    factor = ell_gamma(cmath.exp(-TWO_PI_I * u / omega.omega3), make_base_pair(omega.r_tilde, omega.p_tilde), policy)
    return GammaValue(prefactor * factor.value, abs(prefactor) * factor.est_error)


def modified_G(
    u: complex, omega: OmegaTriple, representation: str = "product", policy: Optional[TruncationPolicy] = None
) -> GammaValue:
    if representation == "product":
        return modified_G_product(u, omega, policy)
    if representation == "b33":
        return modified_G_B33(u, omega, policy)
    raise DomainViolationError(f"unknown representation '{representation}', expected one of {REPRESENTATIONS}")


def _gap(lhs: complex, rhs: complex) -> float:
    scale = max(abs(lhs), abs(rhs))
    return abs(lhs - rhs) / scale if scale else 0.0


def modified_G_equation_residuals(
    u: complex, omega: OmegaTriple, representation: str = "product", policy: Optional[TruncationPolicy] = None
) -> Tuple[float, float, float]:
    """
    Relative residuals of the three defining equations, in the order
    (θ_r shift by ω2, B_{2,2} exponential shift by ω3, θ_p shift by ω1)
    """
    policy = policy or default_policy()
    u = complex(u)
    base = modified_G(u, omega, representation, policy).value

    shift2 = modified_G(u + omega.omega2, omega, representation, policy).value
    rhs2 = theta(cmath.exp(TWO_PI_I * u / omega.omega1), omega.r, policy) * base

    shift3 = modified_G(u + omega.omega3, omega, representation, policy).value
    rhs3 = cmath.exp(-1j * math.pi * bernoulli_B22(u, omega.omega1, omega.omega2)) * base

    shift1 = modified_G(u + omega.omega1, omega, representation, policy).value
    rhs1 = theta(cmath.exp(TWO_PI_I * u / omega.omega2), omega.p, policy) * base

    return _gap(shift2, rhs2), _gap(shift3, rhs3), _gap(shift1, rhs1)


def sl3z_residual(u: complex, omega: OmegaTriple, policy: Optional[TruncationPolicy] = None) -> float:
    """|G_product − G_B33| / |G_product|"""
    policy = policy or default_policy()
    product = modified_G_product(u, omega, policy).value
    exponential = modified_G_B33(u, omega, policy).value
    return abs(product - exponential) / abs(product)


def degeneration_gap(u: complex, omega: OmegaTriple, policy: Optional[TruncationPolicy] = None) -> float:
    """
    Relative distance between G(u;ω) and γ(u;ω1,ω2); small when p and r are
    close to zero
    """
    policy = policy or default_policy()
    value = modified_G_product(u, omega, policy).value
    limit = hyperbolic_gamma_product(u, omega.omega1, omega.omega2, policy).value
    return abs(value - limit) / abs(limit)


def ell_gamma_additive_residuals(
    u: complex, omega: OmegaTriple, policy: Optional[TruncationPolicy] = None
) -> Tuple[float, float]:
    """
    f(u) = Γ_{p,q}(e^{2πiu/ω2}) solves f(u+ω1) = θ_p(e^{2πiu/ω2}) f(u) and is
    ω2-periodic; returns the two relative residuals
    """
    policy = policy or default_policy()
    omega.require_below_one("p", "q")
    base_pair = make_base_pair(omega.p, omega.q)
    u = complex(u)

    def f(v: complex) -> complex:
        return ell_gamma(cmath.exp(TWO_PI_I * v / omega.omega2), base_pair, policy).value

    value = f(u)
    shifted = f(u + omega.omega1)
    expected = theta(cmath.exp(TWO_PI_I * u / omega.omega2), omega.p, policy) * value
    return _gap(shifted, expected), _gap(f(u + omega.omega2), value)


def sample_admissible_omega(rng: np.random.Generator) -> OmegaTriple:
    """
    Random ω with ω2 = 1 and Im τ1, Im τ2, Im τ3 > 0

    Every derived nome (p, q, r and their modular partners) then lies in the
    unit disc. Degenerate lattices are resampled up to the configured limit.
    """
    limit = get_config().verify.resample_limit
    for attempt in range(limit):
        arg1 = rng.uniform(0.5, 1.6)
        tau1 = rng.uniform(0.3, 1.0) / math.sin(arg1) * cmath.exp(1j * arg1)
        arg2 = arg1 + rng.uniform(0.3, 1.2)
        tau2 = rng.uniform(0.6, 1.2) * cmath.exp(1j * arg2)
        try:
            return make_omega_triple(tau1, 1.0, tau2)
        except DegenerateLatticeError as e:
            logger.debug(f"resampling omega after degenerate lattice: {e}")
    raise DomainViolationError(f"no admissible omega triple after {limit} attempts")
