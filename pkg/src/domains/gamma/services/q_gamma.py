"""
Thomae–Jackson q-gamma function
"""

import cmath
import math
from typing import Optional, Tuple

from core.errors import DomainViolationError, PoleProximityError
from core.params import TruncationPolicy, default_policy
from domains.gamma.models.gamma_value import GammaValue
from domains.gamma.services.pochhammer import qpoch_inf


def thomae_jackson_gamma(u: complex, q: complex, policy: Optional[TruncationPolicy] = None) -> GammaValue:
    """
    Γ(u;q) = (1−q)^{1−u} (q;q)_∞ / (q^u;q)_∞ with principal branches

    Raises:
        DomainViolationError: unless 0 < |q| < 1
        PoleProximityError: when q^u hits a zero of the denominator product
    """
    policy = policy or default_policy()
    u, q = complex(u), complex(q)
    if not 0 < abs(q) < 1:
        raise DomainViolationError("Thomae-Jackson gamma needs 0 < |q| < 1", location=q, bound=1.0)

    q_u = cmath.exp(u * cmath.log(q))
    # zeros of (q^u;q)_∞ sit at q^u = q^{-k}, k >= 0
    k = round(-(cmath.log(q_u).real / math.log(abs(q))))
    if k >= 0 and abs(q_u * q ** k - 1.0) < policy.pole_snap:
        raise PoleProximityError("q^u on the zero set of (q^u;q)_inf", location=u, bound=policy.pole_snap)

    prefactor = cmath.exp((1.0 - u) * cmath.log(1.0 - q))
    numerator = qpoch_inf(q, q, policy)
    denominator = qpoch_inf(q_u, q, policy)
    value = prefactor * numerator.value / denominator.value
    return GammaValue(value, abs(value) * (numerator.relative_error + denominator.relative_error))


def thomae_jackson_shift_residuals(
    u: complex, q: complex, policy: Optional[TruncationPolicy] = None
) -> Tuple[float, float]:
    """
    Relative residuals of

        Γ(u+1;q) = (1 − q^u)/(1 − q) Γ(u;q)
        Γ(u − 2πi/log q; q) = (1 − q)^{2πi/log q} Γ(u;q)
    """
    policy = policy or default_policy()
    u, q = complex(u), complex(q)
    log_q = cmath.log(q)
    base = thomae_jackson_gamma(u, q, policy).value

    shifted = thomae_jackson_gamma(u + 1, q, policy).value
    expected = (1.0 - cmath.exp(u * log_q)) / (1.0 - q) * base
    first = abs(shifted - expected) / max(abs(shifted), abs(expected), 1e-300)

    period = 2j * math.pi / log_q
    rotated = thomae_jackson_gamma(u - period, q, policy).value
    expected = cmath.exp(period * cmath.log(1.0 - q)) * base
    second = abs(rotated - expected) / max(abs(rotated), abs(expected), 1e-300)
    return first, second
