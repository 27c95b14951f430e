"""
Theta function and elliptic shifted factorials

θ_p(x) = (x;p)_∞ (p/x;p)_∞ evaluated as a truncated product over numpy
arrays. The truncation index is chosen from the largest argument modulus so
that the remaining factors differ from 1 by less than tol/4 each.
"""

import logging
import math
from typing import Optional, Tuple, Union

import numpy as np

from core.errors import DomainViolationError, NonConvergenceError, PoleProximityError
from core.params import TruncationPolicy, default_policy

logger = logging.getLogger(__name__)

ArrayLike = Union[complex, np.ndarray]


def _as_complex_array(x: ArrayLike) -> np.ndarray:
    return np.asarray(x, dtype=np.complex128)


def truncation_index(scale: float, nome_modulus: float, policy: TruncationPolicy) -> int:
    """
    First index j with |p|^j * scale < tol/4

    Raises:
        NonConvergenceError: if that index exceeds policy.max_terms
    """
    if nome_modulus == 0:
        return 1
    if not nome_modulus < 1:
        raise DomainViolationError("product nome must satisfy |p| < 1", location=nome_modulus, bound=1.0)
    target = policy.tol / 4.0
    scale = max(scale, 1.0)
    count = max(1, int(math.ceil(math.log(target / scale) / math.log(nome_modulus))) + 1)
    if count > policy.max_terms:
        raise NonConvergenceError(
            f"product needs {count} terms for tol={policy.tol:g}",
            location=complex(nome_modulus),
            bound=policy.max_terms,
        )
    return count


def _snap_lattice_zeros(x: np.ndarray, p: complex, values: np.ndarray, policy: TruncationPolicy) -> np.ndarray:
    """Set values to exact zero where x lies within zero_snap of p^k"""
    log_p = math.log(abs(p))
    k = np.rint(np.log(np.abs(x)) / log_p)
    with np.errstate(over="ignore", invalid="ignore"):
        ratio = x * np.power(complex(p), -k)
    near = np.abs(ratio - 1.0) < policy.zero_snap
    if np.any(near):
        values = np.where(near, 0.0 + 0.0j, values)
    return values


def theta_array(x: ArrayLike, p: complex, policy: Optional[TruncationPolicy] = None) -> np.ndarray:
    """
    Vectorized θ_p(x)

    Args:
        x: nonzero complex argument(s)
        p: nome with |p| < 1 (p = 0 gives 1 - x)
        policy: truncation policy

    Returns:
        Array of θ_p values with lattice zeros snapped to exact 0
    """
    policy = policy or default_policy()
    x = _as_complex_array(x)
    p = complex(p)
    if np.any(x == 0):
        raise DomainViolationError("theta argument must be nonzero", location=0j, bound=0.0)

    if p == 0:
        values = 1.0 - x
        return np.where(np.abs(values) < policy.zero_snap, 0.0 + 0.0j, values)

    abs_x = np.abs(x)
    scale = max(float(abs_x.max()), abs(p) / float(abs_x.min()))
    count = truncation_index(scale, abs(p), policy)

    inv_x = 1.0 / x
    values = np.ones_like(x)
    power = 1.0 + 0.0j
    for _ in range(count):
        values = values * (1.0 - x * power) * (1.0 - p * power * inv_x)
        power *= p

    return _snap_lattice_zeros(x, p, values, policy)


def theta_error_bound(x: ArrayLike, p: complex, policy: Optional[TruncationPolicy] = None) -> float:
    """Relative tail bound of the truncated theta product"""
    policy = policy or default_policy()
    if complex(p) == 0:
        return 0.0
    abs_x = np.abs(_as_complex_array(x))
    scale = max(float(abs_x.max()), abs(p) / float(abs_x.min()))
    count = truncation_index(scale, abs(p), policy)
    return 2.0 * max(scale, 1.0) * abs(p) ** count / (1.0 - abs(p))


def theta(x: complex, p: complex, policy: Optional[TruncationPolicy] = None) -> complex:
    """θ_p(x) for a single argument"""
    return complex(theta_array(x, p, policy))


def theta_product(args, p: complex, policy: Optional[TruncationPolicy] = None) -> complex:
    """θ_p(a, b, ...) = θ_p(a) θ_p(b) ..."""
    return complex(np.prod(theta_array(np.asarray(args, dtype=np.complex128), p, policy)))


def _shift_arguments(x: np.ndarray, q: complex, n: int) -> Tuple[np.ndarray, bool]:
    """Arguments x q^j entering θ_p(x;q)_n and whether they are denominators"""
    if n > 0:
        powers = np.power(complex(q), np.arange(n))
        return x[..., None] * powers, False
    powers = np.power(complex(q), -np.arange(1, -n + 1, dtype=float))
    return x[..., None] * powers, True


def theta_pochhammer_array(
    x: ArrayLike, q: complex, p: complex, n: int, policy: Optional[TruncationPolicy] = None
) -> np.ndarray:
    """
    Vectorized elliptic shifted factorial θ_p(x;q)_n for integer n

    Raises:
        PoleProximityError: when a denominator theta vanishes (n < 0)
    """
    policy = policy or default_policy()
    x = _as_complex_array(x)
    if n == 0:
        return np.ones_like(x)

    args, inverse = _shift_arguments(x, q, int(n))
    factors = theta_array(args, p, policy)
    if inverse:
        zero = factors == 0
        if np.any(zero):
            where = complex(args[zero].flat[0])
            raise PoleProximityError("denominator theta factor vanishes", location=where, bound=policy.zero_snap)
        return 1.0 / np.prod(factors, axis=-1)
    return np.prod(factors, axis=-1)


def theta_pochhammer(x: complex, q: complex, p: complex, n: int, policy: Optional[TruncationPolicy] = None) -> complex:
    """θ_p(x;q)_n for a single argument"""
    return complex(theta_pochhammer_array(x, q, p, n, policy))


def qpoch(x: complex, q: complex, n: int) -> complex:
    """Finite q-Pochhammer symbol (x;q)_n for n in Z"""
    x = complex(x)
    q = complex(q)
    if n >= 0:
        result = 1.0 + 0.0j
        for j in range(n):
            result *= 1.0 - x * q ** j
        return result
    result = 1.0 + 0.0j
    for j in range(1, -n + 1):
        factor = 1.0 - x * q ** (-j)
        if factor == 0:
            raise PoleProximityError("q-Pochhammer denominator vanishes", location=x * q ** (-j), bound=0.0)
        result /= factor
    return result
