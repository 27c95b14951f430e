"""
Numeric verification of the integral identities

Transformation formulas compare an (n, m) integral with its (m, n) partner,
recurrences sum shifted integrals with theta-function coefficients, and the
kernel q-difference equation is checked pointwise.
"""

import cmath
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence

import numpy as np

from core.config import get_config
from core.errors import DomainViolationError, PoleProximityError
from core.params import BasePair, TruncationPolicy, default_policy
from domains.gamma.services.elliptic_gamma import gamma_product
from domains.integrals.models.params import AParams, BCParams, VParams, check_ranks
from domains.integrals.models.results import IdentityCheck
from domains.integrals.services.integrals import I_A, I_BC, V
from domains.integrals.services.kernels import a_kernel_values, bc_kernel_values
from domains.quad.models.quadrature import QuadratureResult
from domains.terms.services.builders import beta_term_spec, rho_A_term_spec, rho_BC_term_spec
from domains.terms.services.certificates import eval_term
from domains.theta.services.theta_service import theta

logger = logging.getLogger(__name__)

_BALANCE_TOL = 1e-10


def _run_all(jobs: Sequence[Callable[[], QuadratureResult]]) -> List[QuadratureResult]:
    """Evaluate independent integrals, on a thread pool when quadrature workers > 1"""
    workers = get_config().quadrature.workers
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(job) for job in jobs]
            return [future.result() for future in futures]
    return [job() for job in jobs]


def _pair_products(values: Sequence[complex]) -> List[complex]:
    return [values[i] * values[j] for i in range(len(values)) for j in range(i + 1, len(values))]


def _ratio_check(lhs: QuadratureResult, prefactor: complex, rhs: QuadratureResult) -> IdentityCheck:
    right = prefactor * rhs.value
    if right == 0:
        raise PoleProximityError("right-hand side vanishes", location=right)
    err = (lhs.err_est + abs(prefactor) * rhs.err_est) / abs(right)
    return IdentityCheck(residual=abs(lhs.value / right - 1.0), lhs=lhs.value, rhs=right, err_est=err)


def verify_trafo_BC(
    n: int,
    m: int,
    t: Sequence[complex],
    base: BasePair,
    tol: Optional[float] = None,
    policy: Optional[TruncationPolicy] = None,
) -> IdentityCheck:
    """
    I_n^{(m)}(t) = ∏_{r<s} Γ(t_r t_s) I_m^{(n)}(√(pq)/t)

    Raises:
        DomainViolationError: when a side carrying an integral has a parameter outside the unit disc
    """
    policy = policy or default_policy()
    params = BCParams(n=n, m=m, t=tuple(t), base=base)
    partner = params.transformed()
    prefactor = gamma_product(_pair_products(params.t), base, policy)
    lhs, rhs = _run_all([lambda: I_BC(params, tol, policy), lambda: I_BC(partner, tol, policy)])
    check = _ratio_check(lhs, prefactor, rhs)
    logger.info(f"BC({n},{m}) transformation residual {check.residual:.3e}")
    return check


def verify_trafo_A(
    n: int,
    m: int,
    s: Sequence[complex],
    t: Sequence[complex],
    base: BasePair,
    tol: Optional[float] = None,
    policy: Optional[TruncationPolicy] = None,
) -> IdentityCheck:
    """
    I_n^{(m)}(s; t) = ∏_{j,k} Γ(t_j s_k) I_m^{(n)}(S^{1/(m+1)}/s; T^{1/(m+1)}/t)

    The S root is principal and the T root is pq over it.
    """
    policy = policy or default_policy()
    params = AParams(n=n, m=m, s=tuple(s), t=tuple(t), base=base)
    partner = params.transformed()
    prefactor = gamma_product([tj * sk for tj in params.t for sk in params.s], base, policy)
    lhs, rhs = _run_all([lambda: I_A(params, tol, policy), lambda: I_A(partner, tol, policy)])
    check = _ratio_check(lhs, prefactor, rhs)
    logger.info(f"A({n},{m}) transformation residual {check.residual:.3e}")
    return check


def _require_index_set(indices: Sequence[int], size: int, count: int, what: str) -> List[int]:
    indices = [int(i) for i in indices]
    if len(indices) != size:
        raise DomainViolationError(f"{what} needs {size} indices, got {len(indices)}")
    if len(set(indices)) != size:
        raise DomainViolationError(f"{what} indices must be distinct")
    for i in indices:
        if not 0 <= i < count:
            raise DomainViolationError(f"{what} index {i} out of range 0..{count - 1}")
    return indices


def _require_recurrence_input(n: int, m: int, t: Sequence[complex], target: complex, what: str) -> List[complex]:
    check_ranks(n, m)
    t = [complex(v) for v in t]
    count = 2 * n + 2 * m + 4
    if len(t) != count:
        raise DomainViolationError(f"{what} needs {count} parameters, got {len(t)}")
    product = complex(np.prod(t))
    if abs(product - target) > _BALANCE_TOL * abs(target):
        raise DomainViolationError(f"{what} balancing condition violated", location=product, bound=abs(target))
    return t


def _nonzero_theta(x: complex, p: complex, policy: TruncationPolicy) -> complex:
    value = theta(x, p, policy)
    if value == 0:
        raise DomainViolationError("recurrence coefficient has a vanishing theta denominator", location=x)
    return value


def _recurrence_sum(
    coefficients: Sequence[complex], params: Sequence[BCParams], tol: Optional[float], policy: TruncationPolicy
) -> IdentityCheck:
    results = _run_all([lambda shifted=shifted: I_BC(shifted, tol, policy) for shifted in params])
    terms = [c * r.value for c, r in zip(coefficients, results)]
    scale = max(abs(term) for term in terms)
    total = complex(sum(terms))
    err = sum(abs(c) * r.err_est for c, r in zip(coefficients, results))
    return IdentityCheck(residual=abs(total) / scale, lhs=total, rhs=0j, err_est=err / scale)


def verify_recurrence_I(
    n: int,
    m: int,
    t: Sequence[complex],
    i_set: Sequence[int],
    base: BasePair,
    tol: Optional[float] = None,
    policy: Optional[TruncationPolicy] = None,
) -> IdentityCheck:
    """
    Σ_{i∈I} t_i / ∏_{j∈I, j≠i} θ_p(t_i t_j^{±1}) · I_n^{(m)}(…, q t_i, …) = 0

    for |I| = n+2 and t_1⋯t_{2n+2m+4} = (pq)^m p. The residual is |Σ| over
    the largest term.

    Raises:
        DomainViolationError: for coinciding parameters in I or an unbalanced input
    """
    policy = policy or default_policy()
    t = _require_recurrence_input(n, m, t, base.pq ** m * base.p, "first recurrence")
    indices = _require_index_set(i_set, n + 2, len(t), "first recurrence")

    coefficients, shifted = [], []
    for i in indices:
        denominator = 1.0 + 0.0j
        for j in indices:
            if j != i:
                denominator *= _nonzero_theta(t[i] * t[j], base.p, policy) * _nonzero_theta(t[i] / t[j], base.p, policy)
        coefficients.append(t[i] / denominator)
        moved = list(t)
        moved[i] = base.q * t[i]
        shifted.append(BCParams(n=n, m=m, t=tuple(moved), base=base))
    return _recurrence_sum(coefficients, shifted, tol, policy)


def verify_recurrence_II(
    n: int,
    m: int,
    t: Sequence[complex],
    k_set: Sequence[int],
    base: BasePair,
    tol: Optional[float] = None,
    policy: Optional[TruncationPolicy] = None,
) -> IdentityCheck:
    """
    Σ_{k∈K} ∏_{i∉K} θ_p(t_i t_k/q) / (t_k ∏_{i∈K, i≠k} θ_p(t_i/t_k)) · I_n^{(m)}(…, t_k/q, …) = 0

    for |K| = m+2 and t_1⋯t_{2n+2m+4} = (pq)^{m+1} q.
    """
    policy = policy or default_policy()
    t = _require_recurrence_input(n, m, t, base.pq ** (m + 1) * base.q, "second recurrence")
    indices = _require_index_set(k_set, m + 2, len(t), "second recurrence")
    outside = [i for i in range(len(t)) if i not in indices]

    coefficients, shifted = [], []
    for k in indices:
        numerator = 1.0 + 0.0j
        for i in outside:
            numerator *= theta(t[i] * t[k] / base.q, base.p, policy)
        denominator = t[k]
        for i in indices:
            if i != k:
                denominator *= _nonzero_theta(t[i] / t[k], base.p, policy)
        coefficients.append(numerator / denominator)
        moved = list(t)
        moved[k] = t[k] / base.q
        shifted.append(BCParams(n=n, m=m, t=tuple(moved), base=base))
    return _recurrence_sum(coefficients, shifted, tol, policy)


def kernel_g(x: complex, t: Sequence[complex], p: complex, policy: Optional[TruncationPolicy] = None) -> complex:
    """
    g(x) = ∏_{m≤5} θ_p(t_m x) / ∏_{2≤m≤5} θ_p(t_1 t_m) · θ_p(t_1 P) / θ_p(x², x P) · t_1/x
    """
    policy = policy or default_policy()
    P = complex(np.prod(t))
    value = t[0] / x * theta(t[0] * P, p, policy)
    for tm in t:
        value *= theta(tm * x, p, policy)
    denominator = theta(x * x, p, policy) * theta(x * P, p, policy)
    for tm in t[1:]:
        denominator *= theta(t[0] * tm, p, policy)
    if denominator == 0:
        raise PoleProximityError("kernel coefficient g has a vanishing denominator", location=x)
    return value / denominator


def verify_kernel_qdiff(
    x: complex,
    t: Sequence[complex],
    base: BasePair,
    partner: bool = False,
    policy: Optional[TruncationPolicy] = None,
) -> IdentityCheck:
    """
    Δ(x; q t_1, t_2..t_5) − Δ(x; t) = g(x/q) Δ(x/q; t) − g(x) Δ(x; t)

    With partner=True the roles of p and q are exchanged (shift by p, θ_q in g).
    The residual is relative to the largest of the four terms.

    Raises:
        PoleProximityError: when a kernel evaluation sits on a pole
    """
    policy = policy or default_policy()
    t = [complex(v) for v in t]
    if len(t) != 5:
        raise DomainViolationError(f"kernel identity needs 5 parameters, got {len(t)}")
    x = complex(x)
    roles = base.swapped() if partner else base
    shift, theta_nome = roles.q, roles.p
    spec = beta_term_spec()

    def kernel(point: complex, params: Sequence[complex]) -> complex:
        return eval_term(spec, (point, *params), base, policy)

    moved = [shift * t[0]] + t[1:]
    terms = [
        kernel(x, moved),
        kernel(x, t),
        kernel_g(x / shift, t, theta_nome, policy) * kernel(x / shift, t),
        kernel_g(x, t, theta_nome, policy) * kernel(x, t),
    ]
    lhs = terms[0] - terms[1]
    rhs = terms[2] - terms[3]
    scale = max(abs(term) for term in terms)
    return IdentityCheck(residual=abs(lhs - rhs) / scale, lhs=lhs, rhs=rhs)


def v_reduction_residual(
    t_free: Sequence[complex],
    t7: complex,
    base: BasePair,
    tol: Optional[float] = None,
    policy: Optional[TruncationPolicy] = None,
) -> IdentityCheck:
    """
    V(t_1..t_8) with t_7 t_8 = pq against ∏_{i<j≤6} Γ(t_i t_j)

    t_6 = pq/(t_1⋯t_5) and t_8 = pq/t_7 are derived.
    """
    policy = policy or default_policy()
    free = [complex(v) for v in t_free]
    if len(free) != 5:
        raise DomainViolationError(f"V reduction needs 5 free parameters, got {len(free)}")
    t6 = base.pq / complex(np.prod(free))
    t7 = complex(t7)
    params = VParams(t=tuple(free + [t6, t7, base.pq / t7]), base=base)
    result = V(params, tol, policy)
    closed_form = gamma_product(_pair_products(params.t[:6]), base, policy)
    return IdentityCheck(
        residual=abs(result.value / closed_form - 1.0),
        lhs=result.value,
        rhs=closed_form,
        err_est=result.err_est / abs(closed_form),
    )


def rho_bridge_residual_BC(
    params: BCParams, z: Sequence[complex], y: Sequence[complex], policy: Optional[TruncationPolicy] = None
) -> float:
    """
    |ρ(z, √(pq) y, t) / [Δ_n(z; t) / (∏ Γ(t_r t_s) Δ_m(y; √(pq)/t))] − 1|
    """
    policy = policy or default_policy()
    z = [complex(v) for v in z]
    y = [complex(v) for v in y]
    if len(z) != params.n or len(y) != params.m:
        raise DomainViolationError(f"point needs {params.n} z and {params.m} y coordinates")
    spec = rho_BC_term_spec(params.n, params.m)
    root = cmath.sqrt(params.base.pq)
    point = z + [root * v for v in y] + list(params.t)
    via_term = eval_term(spec, point, params.base, policy)

    numerator = complex(bc_kernel_values(z, params.t, params.base, policy))
    partner = complex(bc_kernel_values(y, [root / v for v in params.t], params.base, policy))
    direct = numerator / (gamma_product(_pair_products(params.t), params.base, policy) * partner)
    return abs(via_term / direct - 1.0)


def rho_bridge_residual_A(
    params: AParams, z: Sequence[complex], y: Sequence[complex], policy: Optional[TruncationPolicy] = None
) -> float:
    """
    |ρ(z, σ y, s, t) / [Δ_n(z; s, t) / (∏ Γ(s_k t_r) Δ_m(y; σ/s, τ/t))] − 1|

    z and y are the free coordinates; the last of each follows from ∏ z = ∏ y = 1.
    """
    policy = policy or default_policy()
    z = [complex(v) for v in z]
    y = [complex(v) for v in y]
    if len(z) != params.n or len(y) != params.m:
        raise DomainViolationError(f"point needs {params.n} z and {params.m} y coordinates")
    z.append(1.0 / complex(np.prod(z)))
    y.append(1.0 / complex(np.prod(y)))
    sigma, tau = params.roots()
    spec = rho_A_term_spec(params.n, params.m)
    point = z + [sigma * v for v in y] + list(params.s) + list(params.t)
    via_term = eval_term(spec, point, params.base, policy)

    numerator = complex(a_kernel_values(z, params.s, params.t, params.base, policy))
    partner = complex(
        a_kernel_values(y, [sigma / v for v in params.s], [tau / v for v in params.t], params.base, policy)
    )
    cross = gamma_product([sk * tr for sk in params.s for tr in params.t], params.base, policy)
    return abs(via_term / (numerator / (cross * partner)) - 1.0)
