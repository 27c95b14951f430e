"""
Elliptic gamma function Γ_{p,q}(z)

Γ_{p,q}(z) = ∏_{j,k≥0} (1 − z^{−1} p^{j+1} q^{k+1}) / (1 − z p^j q^k)

The double product runs over the triangle of coefficients c = p^j q^k with
|c| above a cutoff. The cutoff drops a decade at a time until the bound on
the omitted factors is within the tolerance. Large triangles are summed in log form (exp of a sum of principal logs is
branch-safe); the inner loop optionally runs through numba.
"""

import logging
import math
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from core.accel import gamma_log_kernel
from core.errors import DomainViolationError, NonConvergenceError, PoleProximityError
from core.params import BasePair, TruncationPolicy, default_policy, make_base_pair
from domains.gamma.models.gamma_value import GammaValue
from domains.theta.services.theta_service import theta_array

logger = logging.getLogger(__name__)

# Upper bound on (arguments x coefficients) handled per numpy chunk
_CHUNK_ELEMENTS = 2_000_000

# Decades the cutoff may drop below its first guess
_CUTOFF_REFINEMENTS = 12


def _index_limit(modulus: float, cutoff: float, max_terms: int) -> int:
    if modulus == 0:
        return 0
    limit = int(math.floor(math.log(cutoff) / math.log(modulus)))
    if limit > max_terms:
        raise NonConvergenceError(
            f"elliptic gamma needs {limit} terms per index", location=complex(modulus), bound=max_terms
        )
    return max(limit, 0)


@lru_cache(maxsize=128)
def nome_grid(p: complex, q: complex, cutoff: float, max_terms: int) -> np.ndarray:
    """
    Flat array of p^j q^k over the truncated triangle |p|^j |q|^k >= cutoff

    Index 0 always holds the (0, 0) entry 1.
    """
    ap, aq = abs(p), abs(q)
    j_max = _index_limit(ap, cutoff, max_terms)
    k_max = _index_limit(aq, cutoff, max_terms)
    entries = []
    p_power = 1.0 + 0.0j
    for j in range(j_max + 1):
        q_power = 1.0 + 0.0j
        for k in range(k_max + 1):
            if abs(p_power) * abs(q_power) < cutoff and (j, k) != (0, 0):
                break
            entries.append(p_power * q_power)
            q_power *= q
            if aq == 0:
                break
        p_power *= p
        if ap == 0:
            break
    grid = np.array(entries, dtype=np.complex128)
    grid.setflags(write=False)
    return grid


def _quantized_cutoff(cutoff: float) -> float:
    """Round the cutoff down to a power of ten so coefficient grids are shared"""
    return 10.0 ** math.floor(math.log10(cutoff))


def _tail_bound(ap: float, aq: float, scale: float, cutoff: float, max_terms: int) -> float:
    """
    Relative error bound of the product restricted to |p^j q^k| >= cutoff

    Rows j <= j_max drop a q-tail below cutoff/(1 - |q|) each; the rows past
    j_max sum to less than cutoff/((1 - |p|)(1 - |q|)). A dropped coefficient c
    enters two factors 1 - a c with |a| <= scale, and |log(1 - a c)| is at
    most 1.5 scale |c| while scale |c| <= 1/3.
    """
    rows = _index_limit(ap, cutoff, max_terms) + 1
    omitted = cutoff * (rows / (1.0 - aq) + 1.0 / ((1.0 - ap) * (1.0 - aq)))
    return 4.0 * scale * omitted


def truncated_grid(p: complex, q: complex, scale: float, policy: TruncationPolicy) -> Tuple[np.ndarray, float]:
    """
    Coefficient grid together with its relative error bound, at most tol/2

    Raises:
        NonConvergenceError: when max_terms does not admit such a grid
    """
    ap, aq = abs(p), abs(q)
    target = 0.5 * policy.tol
    cutoff = _quantized_cutoff(target * (1.0 - ap) * (1.0 - aq) / (8.0 * scale))
    for _ in range(_CUTOFF_REFINEMENTS):
        bound = _tail_bound(ap, aq, scale, cutoff, policy.max_terms)
        if bound <= target:
            return nome_grid(p, q, cutoff, policy.max_terms), bound
        cutoff /= 10.0
    raise NonConvergenceError(
        f"elliptic gamma truncation bound stays above tol={policy.tol:g}", location=complex(p * q), bound=policy.tol
    )


def _numpy_log_kernel(z: np.ndarray, c: np.ndarray, pq: complex) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    num = 1.0 - (pq / z)[:, None] * c[None, :]
    den = 1.0 - z[:, None] * c[None, :]
    min_num = np.abs(num).min(axis=1)
    min_den = np.abs(den).min(axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        logs = np.log(num) - np.log(den)
    logs = np.where(np.isfinite(logs), logs, 0.0)
    return logs.sum(axis=1), min_den, min_num


def _numpy_product_kernel(z: np.ndarray, c: np.ndarray, pq: complex) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    num = 1.0 - (pq / z)[:, None] * c[None, :]
    den = 1.0 - z[:, None] * c[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        values = np.prod(num, axis=1) / np.prod(den, axis=1)
    return values, np.abs(den).min(axis=1), np.abs(num).min(axis=1)


def _standard_gamma(z: np.ndarray, p: complex, q: complex, policy: TruncationPolicy) -> Tuple[np.ndarray, float]:
    abs_z = np.abs(z)
    pq = p * q
    scale = max(float(abs_z.max()), abs(pq) / float(abs_z.min()), 1.0)
    c, rel_error = truncated_grid(p, q, scale, policy)
    use_logs = c.size > policy.log_sum_threshold

    flat = z.reshape(-1)
    out = np.empty_like(flat)
    chunk = max(1, _CHUNK_ELEMENTS // max(c.size, 1))
    for start in range(0, flat.size, chunk):
        part = flat[start:start + chunk]
        compiled = gamma_log_kernel(part, c, pq) if use_logs else None
        if compiled is not None:
            logs, min_den, min_num = compiled
            values = np.exp(logs)
        elif use_logs:
            logs, min_den, min_num = _numpy_log_kernel(part, c, pq)
            values = np.exp(logs)
        else:
            values, min_den, min_num = _numpy_product_kernel(part, c, pq)

        poles = min_den < policy.pole_snap
        if np.any(poles):
            where = complex(part[poles][0])
            raise PoleProximityError(
                "argument on the pole lattice z = p^-j q^-k", location=where, bound=policy.pole_snap
            )
        out[start:start + chunk] = np.where(min_num < policy.zero_snap, 0.0 + 0.0j, values)

    return out.reshape(z.shape), rel_error


def ell_gamma_array(z, base: BasePair, policy: Optional[TruncationPolicy] = None) -> np.ndarray:
    """
    Vectorized Γ_{p,q}(z)

    The |q| > 1 regime uses Γ_{p,q}(z) = Γ_{p,q^{-1}}(q^{-1} z)^{-1}.

    Raises:
        DomainViolationError: for z = 0
        PoleProximityError: for arguments on the pole lattice
        NonConvergenceError: if the truncation exceeds max_terms
    """
    return _ell_gamma_with_error(z, base, policy)[0]


def _ell_gamma_with_error(z, base: BasePair, policy: Optional[TruncationPolicy]) -> Tuple[np.ndarray, float]:
    policy = policy or default_policy()
    z = np.asarray(z, dtype=np.complex128)
    if np.any(z == 0):
        raise DomainViolationError("elliptic gamma argument must be nonzero", location=0j, bound=0.0)

    if base.inverted_q:
        q_inv = 1.0 / base.q
        values, rel_error = _standard_gamma(z * q_inv, base.p, q_inv, policy)
        if np.any(values == 0):
            raise PoleProximityError("reciprocal of a vanishing gamma value", location=complex(z[values == 0].flat[0]))
        return 1.0 / values, rel_error / (1.0 - rel_error)
    return _standard_gamma(z, base.p, base.q, policy)


def ell_gamma(z: complex, base: BasePair, policy: Optional[TruncationPolicy] = None) -> GammaValue:
    """Γ_{p,q}(z) for a single argument"""
    values, rel_error = _ell_gamma_with_error(z, base, policy)
    value = complex(values)
    return GammaValue(value, abs(value) * rel_error)


def gamma_product(args, base: BasePair, policy: Optional[TruncationPolicy] = None) -> complex:
    """Γ_{p,q}(a, b, ...) = Γ(a) Γ(b) ..."""
    return complex(np.prod(ell_gamma_array(np.asarray(args, dtype=np.complex128), base, policy)))


def inverse_gamma_pair(z, base: BasePair, policy: Optional[TruncationPolicy] = None) -> np.ndarray:
    """
    1/(Γ(z) Γ(z^{-1})) = θ_p(z^{-1}) θ_q(z), entire in z on C^*
    """
    z = np.asarray(z, dtype=np.complex128)
    return theta_array(1.0 / z, base.p, policy) * theta_array(z, base.q, policy)


def ell_gamma_residue_limit(base: BasePair, policy: Optional[TruncationPolicy] = None) -> GammaValue:
    """
    lim_{z→1} (1 − z) Γ_{p,q}(z)

    The (j, k) = (0, 0) denominator factor is dropped and the remaining
    product is evaluated at z = 1; it equals 1/((p;p)_∞ (q;q)_∞).
    """
    policy = policy or default_policy()
    if base.inverted_q:
        raise DomainViolationError("residue limit needs |q| < 1", location=base.q, bound=1.0)
    pq = base.pq
    c, rel_error = truncated_grid(base.p, base.q, 1.0, policy)
    numerator = np.log(1.0 - pq * c).sum()
    denominator = np.log(1.0 - c[1:]).sum()
    value = complex(np.exp(numerator - denominator))
    return GammaValue(value, abs(value) * rel_error)


def duplication_residual(z: complex, base: BasePair, policy: Optional[TruncationPolicy] = None) -> float:
    """
    |Γ(z²) − Γ(±z, ±q^{1/2} z, ±p^{1/2} z, ±(pq)^{1/2} z)|

    Principal square roots; each root enters with both signs so the branch
    choice does not affect the product.
    """
    policy = policy or default_policy()
    z = complex(z)
    roots = [1.0, complex(np.sqrt(complex(base.q))), complex(np.sqrt(complex(base.p))), complex(np.sqrt(complex(base.pq)))]
    args = []
    for root in roots:
        args.extend([root * z, -root * z])

    lhs = ell_gamma(z * z, base, policy).value
    nonzero = [a for a in args if a != 0]
    rhs = gamma_product(nonzero, base, policy) if nonzero else 1.0
    return abs(lhs - rhs)


def swapped_base(base: BasePair) -> BasePair:
    """BasePair with p and q exchanged"""
    return make_base_pair(base.q, base.p)
