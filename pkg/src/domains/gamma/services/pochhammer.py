"""
Infinite q-Pochhammer products (x;q)_∞
"""

import logging
from typing import Optional

import numpy as np

from core.errors import DomainViolationError
from core.params import TruncationPolicy, default_policy
from domains.gamma.models.gamma_value import GammaValue
from domains.theta.services.theta_service import truncation_index

logger = logging.getLogger(__name__)


def qpoch_inf_array(x, q: complex, policy: Optional[TruncationPolicy] = None) -> np.ndarray:
    """Vectorized (x;q)_∞ over an argument array"""
    policy = policy or default_policy()
    q = complex(q)
    if not abs(q) < 1:
        raise DomainViolationError("(x;q)_inf needs |q| < 1", location=q, bound=1.0)
    x = np.asarray(x, dtype=np.complex128)
    if q == 0:
        return 1.0 - x

    scale = float(np.abs(x).max()) if x.size else 0.0
    count = truncation_index(scale, abs(q), policy)
    values = np.ones_like(x)
    power = 1.0 + 0.0j
    for _ in range(count):
        values = values * (1.0 - x * power)
        power *= q
    return values


def qpoch_inf(x: complex, q: complex, policy: Optional[TruncationPolicy] = None) -> GammaValue:
    """
    (x;q)_∞ = ∏_{j≥0} (1 - x q^j)

    Raises:
        DomainViolationError: if |q| >= 1
        NonConvergenceError: if the truncation exceeds max_terms
    """
    policy = policy or default_policy()
    value = complex(qpoch_inf_array(x, q, policy))
    if complex(q) == 0 or x == 0:
        return GammaValue(value, 0.0)
    count = truncation_index(abs(x), abs(q), policy)
    tail = 2.0 * abs(x) * abs(q) ** count / (1.0 - abs(q))
    return GammaValue(value, abs(value) * tail)
