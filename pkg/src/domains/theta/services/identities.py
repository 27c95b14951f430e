"""
Residuals of the theta function identities

Each check evaluates both sides independently through the truncated
products and reports how far apart they are.
"""

import cmath
import math
from typing import Optional, Tuple

from core.errors import DomainViolationError
from core.params import TruncationPolicy, default_policy
from domains.gamma.services.bernoulli import bernoulli_B22
from domains.gamma.services.pochhammer import qpoch_inf
from domains.theta.services.theta_service import theta, theta_pochhammer, theta_product


def relative_gap(lhs: complex, rhs: complex) -> float:
    """|lhs - rhs| relative to the larger side (0 when both vanish)"""
    scale = max(abs(lhs), abs(rhs))
    if scale == 0:
        return 0.0
    return abs(lhs - rhs) / scale


def triple_product_check(x: complex, p: complex, N: int, policy: Optional[TruncationPolicy] = None) -> float:
    """
    |Σ_{n=-N}^{N} p^{n(n-1)/2} (-x)^n − (p;p)_∞ θ_p(x)|

    The partial sum is evaluated term by term; the caller chooses N large
    enough for the tail p^{N(N-1)/2} to fall below its threshold.
    """
    policy = policy or default_policy()
    x = complex(x)
    p = complex(p)
    if x == 0:
        raise DomainViolationError("triple product needs x != 0", location=x, bound=0.0)

    partial = 0.0 + 0.0j
    log_p = cmath.log(p) if p != 0 else None
    log_mx = cmath.log(-x)
    for n in range(-N, N + 1):
        exponent = n * (n - 1) // 2
        if log_p is None:
            if exponent != 0:
                continue
            partial += (-x) ** n
            continue
        log_term = exponent * log_p + n * log_mx
        if log_term.real < -745:
            continue
        partial += cmath.exp(log_term)

    rhs = qpoch_inf(p, p, policy).value * theta(x, p, policy) if p != 0 else 1.0 - x
    return abs(partial - rhs)


def addition_law_residual(
    x: complex, y: complex, w: complex, z: complex, p: complex, policy: Optional[TruncationPolicy] = None
) -> float:
    """|θ(xw^±, yz^±) − θ(xz^±, yw^±) − (y/w) θ(xy^±, wz^±)|"""
    policy = policy or default_policy()
    first = theta_product([x * w, x / w, y * z, y / z], p, policy)
    second = theta_product([x * z, x / z, y * w, y / w], p, policy)
    third = (y / w) * theta_product([x * y, x / y, w * z, w / z], p, policy)
    return abs(first - second - third)


def quasiperiodicity_residuals(
    x: complex, q: complex, p: complex, m: int, k: int, policy: Optional[TruncationPolicy] = None
) -> Tuple[float, float, float]:
    """
    Relative residuals of the three quasiperiodicity relations

    θ_p(p^m x)       = (−x)^{−m} p^{−m(m−1)/2} θ_p(x)
    θ_p(p^m x; q)_k  = (−x)^{−mk} q^{−mk(k−1)/2} p^{−km(m−1)/2} θ_p(x; q)_k
    θ_p(x; pq)_k     = (−x)^{−k(k−1)/2} q^{−k(k−1)(2k−1)/6} p^{−k(k−1)(k−2)/6} θ_p(x; q)_k
    """
    policy = policy or default_policy()
    x, q, p = complex(x), complex(q), complex(p)
    shifted = x * p ** m

    lhs1 = theta(shifted, p, policy)
    rhs1 = (-x) ** (-m) * p ** (-(m * (m - 1) // 2)) * theta(x, p, policy)

    base_factorial = theta_pochhammer(x, q, p, k, policy)
    lhs2 = theta_pochhammer(shifted, q, p, k, policy)
    rhs2 = (-x) ** (-m * k) * q ** (-(m * k * (k - 1) // 2)) * p ** (-(k * m * (m - 1) // 2)) * base_factorial

    lhs3 = theta_pochhammer(x, p * q, p, k, policy)
    rhs3 = (
        (-x) ** (-(k * (k - 1) // 2))
        * q ** (-(k * (k - 1) * (2 * k - 1) // 6))
        * p ** (-(k * (k - 1) * (k - 2) // 6))
        * base_factorial
    )
    return relative_gap(lhs1, rhs1), relative_gap(lhs2, rhs2), relative_gap(lhs3, rhs3)


def theta_modular_residual(
    u: complex, omega1: complex, omega2: complex, policy: Optional[TruncationPolicy] = None
) -> float:
    """
    Relative residual of θ_q̃(e^{−2πiu/ω1}) = e^{πi B22(u|ω1,ω2)} θ_q(e^{2πiu/ω2})

    Raises:
        DomainViolationError: unless Im(ω1/ω2) > 0
    """
    policy = policy or default_policy()
    omega1, omega2 = complex(omega1), complex(omega2)
    tau = omega1 / omega2
    if not tau.imag > 0:
        raise DomainViolationError("theta modular relation needs Im(omega1/omega2) > 0", location=tau, bound=0.0)
    two_pi_i = 2j * math.pi
    q = cmath.exp(two_pi_i * tau)
    q_tilde = cmath.exp(-two_pi_i / tau)

    lhs = theta(cmath.exp(-two_pi_i * u / omega1), q_tilde, policy)
    rhs = cmath.exp(1j * math.pi * bernoulli_B22(u, omega1, omega2)) * theta(cmath.exp(two_pi_i * u / omega2), q, policy)
    return relative_gap(lhs, rhs)
