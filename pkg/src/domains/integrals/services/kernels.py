"""
Integrands of the elliptic beta, V, BC_n and A_n integrals

Every kernel is returned as a TorusIntegrand carrying its pole families.
Denominators 1/Γ(w^{±1}) go through inverse_gamma_pair, which is entire, so
the only poles are those of the Γ(t z^{±1}) numerators. Factors depending on
one variable are evaluated on the 1-D nodes and broadcast.
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.params import BasePair, TruncationPolicy, default_policy
from domains.gamma.services.elliptic_gamma import ell_gamma_array, gamma_product, inverse_gamma_pair
from domains.gamma.services.pochhammer import qpoch_inf
from domains.integrals.models.params import AParams, BCParams, BetaParams, VParams
from domains.quad.models.quadrature import PoleFamily, TorusIntegrand

logger = logging.getLogger(__name__)


def nome_constant(base: BasePair, policy: Optional[TruncationPolicy] = None) -> complex:
    """(p;p)_∞ (q;q)_∞"""
    policy = policy or default_policy()
    return qpoch_inf(base.p, base.p, policy).value * qpoch_inf(base.q, base.q, policy).value


def kappa_BC(n: int, base: BasePair, policy: Optional[TruncationPolicy] = None) -> complex:
    """(p;p)^n (q;q)^n / (2^n n!), the BC_n constant against the normalized torus measure"""
    return nome_constant(base, policy) ** n / (2 ** n * math.factorial(n))


def mu_A(n: int, base: BasePair, policy: Optional[TruncationPolicy] = None) -> complex:
    """(p;p)^n (q;q)^n / (n+1)!, the A_n constant against the normalized torus measure"""
    return nome_constant(base, policy) ** n / math.factorial(n + 1)


def _axis_exponents(dimension: int, axis: int, power: int = 1) -> Tuple[int, ...]:
    exponents = [0] * dimension
    exponents[axis] = power
    return tuple(exponents)


def gamma_pair_families(t: Sequence[complex], dimension: int) -> List[PoleFamily]:
    """Pole families of ∏_r Γ(t_r z_j^{±1}) on every axis j"""
    families = []
    for axis in range(dimension):
        exponents = _axis_exponents(dimension, axis)
        for r, value in enumerate(t):
            families.append(PoleFamily(exponents, value, outward=False, label=f"t{r + 1}/z{axis + 1}"))
            families.append(PoleFamily(exponents, 1.0 / value, outward=True, label=f"t{r + 1}*z{axis + 1}"))
    return families


def gamma_pair_values(
    t: Sequence[complex], z: np.ndarray, base: BasePair, policy: Optional[TruncationPolicy] = None
) -> np.ndarray:
    """∏_r Γ(t_r z) Γ(t_r/z) over an array of points"""
    policy = policy or default_policy()
    z = np.asarray(z, dtype=np.complex128)
    t = np.asarray(t, dtype=np.complex128)
    args = np.concatenate([t[:, None] * z.reshape(1, -1), t[:, None] / z.reshape(1, -1)])
    return np.prod(ell_gamma_array(args, base, policy), axis=0).reshape(z.shape)


def bc_single_factor(
    t: Sequence[complex], z: np.ndarray, base: BasePair, policy: Optional[TruncationPolicy] = None
) -> np.ndarray:
    """∏_r Γ(t_r z^{±1}) / Γ(z^{±2})"""
    z = np.asarray(z, dtype=np.complex128)
    return gamma_pair_values(t, z, base, policy) * inverse_gamma_pair(z * z, base, policy)


def bc_kernel_values(
    z: Sequence[np.ndarray], t: Sequence[complex], base: BasePair, policy: Optional[TruncationPolicy] = None
) -> np.ndarray:
    """
    Δ_n(z; t) = ∏_{i<j} 1/Γ(z_i^{±1} z_j^{±1}) ∏_j ∏_r Γ(t_r z_j^{±1}) / Γ(z_j^{±2})

    The z_j are broadcastable arrays.
    """
    policy = policy or default_policy()
    value = 1.0 + 0.0j
    for j, zj in enumerate(z):
        value = value * bc_single_factor(t, zj, base, policy)
        for zi in z[:j]:
            value = value * inverse_gamma_pair(zi * zj, base, policy) * inverse_gamma_pair(zi / zj, base, policy)
    return value


def a_kernel_values(
    z: Sequence[np.ndarray],
    s: Sequence[complex],
    t: Sequence[complex],
    base: BasePair,
    policy: Optional[TruncationPolicy] = None,
) -> np.ndarray:
    """
    Δ_n(z; s, t) = ∏_{j<k} 1/Γ(z_j z_k^{-1}, z_j^{-1} z_k) ∏_j ∏_l Γ(s_l z_j, t_l z_j^{-1})

    over all n+1 variables, which must already satisfy ∏ z_j = 1.
    """
    policy = policy or default_policy()
    s = np.asarray(s, dtype=np.complex128)
    t = np.asarray(t, dtype=np.complex128)
    value = 1.0 + 0.0j
    for k, zk in enumerate(z):
        zk = np.asarray(zk, dtype=np.complex128)
        flat = zk.reshape(1, -1)
        args = np.concatenate([s[:, None] * flat, t[:, None] / flat])
        value = value * np.prod(ell_gamma_array(args, base, policy), axis=0).reshape(zk.shape)
        for zj in z[:k]:
            value = value * inverse_gamma_pair(zj / zk, base, policy)
    return value


def beta_constant(params: BetaParams, policy: Optional[TruncationPolicy] = None) -> complex:
    """∏_{j≤5} Γ(P/t_j) / ∏_{i<j≤5} Γ(t_i t_j), P = t_1⋯t_5"""
    free = params.free
    P = complex(np.prod(free))
    numerator = gamma_product([P / tj for tj in free], params.base, policy)
    denominator = gamma_product([free[i] * free[j] for i in range(5) for j in range(i + 1, 5)], params.base, policy)
    return numerator / denominator


def beta_integrand(params: BetaParams, policy: Optional[TruncationPolicy] = None) -> TorusIntegrand:
    """
    Δ(x; t_1..t_5) = C ∏_{j≤5} Γ(t_j x^{±1}) / (Γ(x^{±2}) Γ(P x^{±1}))

    1/Γ(P x^{±1}) is written as Γ(t_6 x^{∓1}) with t_6 = pq/P.
    """
    policy = policy or default_policy()
    base = params.base
    constant = beta_constant(params, policy)

    def evaluate(grids):
        return constant * bc_single_factor(params.t, grids[0], base, policy)

    return TorusIntegrand(
        dimension=1,
        evaluate=evaluate,
        poles=gamma_pair_families(params.t, 1),
        p=base.p,
        q=base.q,
        label="elliptic beta",
    )


def v_integrand(params: VParams, policy: Optional[TruncationPolicy] = None) -> TorusIntegrand:
    """∏_{j≤8} Γ(t_j x^{±1}) / Γ(x^{±2})"""
    policy = policy or default_policy()

    def evaluate(grids):
        return bc_single_factor(params.t, grids[0], params.base, policy)

    return TorusIntegrand(
        dimension=1,
        evaluate=evaluate,
        poles=gamma_pair_families(params.t, 1),
        p=params.base.p,
        q=params.base.q,
        label="V-function",
    )


def bc_integrand(params: BCParams, policy: Optional[TruncationPolicy] = None) -> TorusIntegrand:
    """Δ_n(z; t) of the type I BC_n integral on T^n"""
    policy = policy or default_policy()
    base = params.base

    def evaluate(grids):
        return bc_kernel_values(grids, params.t, base, policy)

    return TorusIntegrand(
        dimension=params.n,
        evaluate=evaluate,
        poles=gamma_pair_families(params.t, params.n),
        p=base.p,
        q=base.q,
        label=f"BC({params.n},{params.m})",
    )


def a_integrand(params: AParams, policy: Optional[TruncationPolicy] = None) -> TorusIntegrand:
    """Δ_n(z; s, t) of the type I A_n integral with z_{n+1} = 1/(z_1⋯z_n) substituted"""
    policy = policy or default_policy()
    base = params.base
    n = params.n

    def evaluate(grids):
        last = 1.0 + 0.0j
        for grid in grids:
            last = last / grid
        return a_kernel_values(list(grids) + [last], params.s, params.t, base, policy)

    poles = []
    diagonal = (1,) * n
    for axis in range(n):
        exponents = _axis_exponents(n, axis)
        for l, (sl, tl) in enumerate(zip(params.s, params.t)):
            poles.append(PoleFamily(exponents, 1.0 / sl, outward=True, label=f"s{l + 1}*z{axis + 1}"))
            poles.append(PoleFamily(exponents, tl, outward=False, label=f"t{l + 1}/z{axis + 1}"))
    for l, (sl, tl) in enumerate(zip(params.s, params.t)):
        # z_{n+1} = 1/∏z
        poles.append(PoleFamily(diagonal, sl, outward=False, label=f"s{l + 1}*z{n + 1}"))
        poles.append(PoleFamily(diagonal, 1.0 / tl, outward=True, label=f"t{l + 1}/z{n + 1}"))

    return TorusIntegrand(
        dimension=n,
        evaluate=evaluate,
        poles=poles,
        p=base.p,
        q=base.q,
        label=f"A({params.n},{params.m})",
    )
