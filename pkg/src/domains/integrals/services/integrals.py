"""
Numeric values of the elliptic beta, V, BC_n and A_n integrals
"""

import logging
from typing import Optional

from core.params import TruncationPolicy, default_policy
from domains.integrals.models.params import AParams, BCParams, BetaParams, VParams
from domains.integrals.services.kernels import (
    a_integrand,
    a_kernel_values,
    bc_integrand,
    beta_integrand,
    kappa_BC,
    mu_A,
    nome_constant,
    v_integrand,
)
from domains.quad.models.quadrature import QuadratureResult, constant_result
from domains.quad.services.torus import integrate_torus

logger = logging.getLogger(__name__)


def elliptic_beta(
    params: BetaParams, tol: Optional[float] = None, policy: Optional[TruncationPolicy] = None
) -> QuadratureResult:
    """
    κ ∮ Δ(x; t_1..t_5) dx/x with κ = (p;p)(q;q)/(4πi); the exact value is 1

    Raises:
        PoleProximityError: when a parameter lattice reaches the unit circle
        NonConvergenceError: when grid doubling stalls
    """
    policy = policy or default_policy()
    result = integrate_torus(beta_integrand(params, policy), tol=tol)
    return result.scaled(nome_constant(params.base, policy) / 2)


def V(params: VParams, tol: Optional[float] = None, policy: Optional[TruncationPolicy] = None) -> QuadratureResult:
    """V(t_1..t_8; p, q) = κ ∮ ∏ Γ(t_j x^{±1}) / Γ(x^{±2}) dx/x"""
    policy = policy or default_policy()
    result = integrate_torus(v_integrand(params, policy), tol=tol)
    return result.scaled(nome_constant(params.base, policy) / 2)


def I_BC(params: BCParams, tol: Optional[float] = None, policy: Optional[TruncationPolicy] = None) -> QuadratureResult:
    """
    Type I BC_n integral I_n^{(m)}(t); n = 0 is the empty integral 1

    Raises:
        DomainViolationError: outside the supported ranks (checked by BCParams)
    """
    if params.n == 0:
        return constant_result()
    policy = policy or default_policy()
    logger.debug(f"BC({params.n},{params.m}) integral, {len(params.t)} parameters")
    result = integrate_torus(bc_integrand(params, policy), tol=tol)
    return result.scaled(kappa_BC(params.n, params.base, policy))


def I_A(params: AParams, tol: Optional[float] = None, policy: Optional[TruncationPolicy] = None) -> QuadratureResult:
    """
    Type I A_n integral I_n^{(m)}(s; t) over z_1⋯z_{n+1} = 1

    For n = 0 the torus is the single point z_1 = 1 and the value is the
    kernel there, ∏_l Γ(s_l) Γ(t_l).
    """
    policy = policy or default_policy()
    if params.n == 0:
        return constant_result(complex(a_kernel_values([1.0 + 0.0j], params.s, params.t, params.base, policy)))
    logger.debug(f"A({params.n},{params.m}) integral, {2 * params.count} parameters")
    result = integrate_torus(a_integrand(params, policy), tol=tol)
    return result.scaled(mu_A(params.n, params.base, policy))
