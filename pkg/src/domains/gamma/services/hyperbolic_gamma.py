"""
Hyperbolic gamma function γ(u;ω1,ω2)

Two representations:

- product form (e^{2πiu/ω1} q̃; q̃)_∞ / (e^{2πiu/ω2}; q)_∞, q = e^{2πiω1/ω2},
  q̃ = e^{−2πiω2/ω1}, meromorphic in u whenever Im(ω1/ω2) ≠ 0;
- contour integral exp(−∫_{R+i0} e^{ux} / ((1−e^{ω1x})(1−e^{ω2x})) dx/x),
  valid in the strip 0 < Re u < Re(ω1+ω2) for Re ω1, Re ω2 > 0.

The contour is deformed to [−L−, −r] ∪ (upper semicircle of radius r) ∪
[r, L+]; each piece is integrated with Gauss–Legendre panels whose count is
doubled until the exponentiated value is stable.
"""

import cmath
import logging
import math
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss

from core.config import get_config
from core.errors import DomainViolationError, NonConvergenceError, PoleProximityError
from core.params import TruncationPolicy, default_policy
from domains.gamma.models.gamma_value import GammaValue
from domains.gamma.services.pochhammer import qpoch_inf

logger = logging.getLogger(__name__)

TWO_PI_I = 2j * math.pi

# Tail length in units of the inverse decay rate (e^-40 ~ 4e-18)
_TAIL_DECAY_UNITS = 40.0


def _qpoch_any(x: complex, q: complex, policy: TruncationPolicy) -> Tuple[complex, float]:
    """
    (x;q)_∞ and its relative tail bound, with the convention
    (x;q)_∞ = 1/(x q^{-1}; q^{-1})_∞ for |q| > 1
    """
    if abs(q) < 1:
        result = qpoch_inf(x, q, policy)
        return result.value, result.relative_error
    q_inv = 1.0 / q
    result = qpoch_inf(x * q_inv, q_inv, policy)
    if result.value == 0:
        raise PoleProximityError("hyperbolic gamma pole", location=x, bound=policy.pole_snap)
    rel = result.relative_error
    return 1.0 / result.value, rel / (1.0 - rel)


def hyperbolic_gamma_product(
    u: complex, omega1: complex, omega2: complex, policy: Optional[TruncationPolicy] = None
) -> GammaValue:
    """
    Product form of γ(u;ω1,ω2)

    Raises:
        DomainViolationError: when Im(ω1/ω2) = 0 (|q| = 1)
        PoleProximityError: at zeros of the denominator product
    """
    policy = policy or default_policy()
    u, omega1, omega2 = complex(u), complex(omega1), complex(omega2)
    tau = omega1 / omega2
    if tau.imag == 0:
        raise DomainViolationError("product form needs Im(omega1/omega2) != 0", location=tau, bound=0.0)

    q = cmath.exp(TWO_PI_I * tau)
    q_tilde = cmath.exp(-TWO_PI_I / tau)
    z = cmath.exp(TWO_PI_I * u / omega2)
    numerator, num_error = _qpoch_any(cmath.exp(TWO_PI_I * u / omega1) * q_tilde, q_tilde, policy)
    denominator, den_error = _qpoch_any(z, q, policy)
    if abs(denominator) < policy.pole_snap * max(1.0, abs(numerator)):
        raise PoleProximityError("hyperbolic gamma pole", location=u, bound=policy.pole_snap)
    value = numerator / denominator
    # (1 + e1)/(1 - e2) - 1 <= (e1 + e2)/(1 - e2)
    rel_error = (num_error + den_error) / (1.0 - den_error)
    return GammaValue(value, abs(value) * rel_error)


def _log_integrand(x: np.ndarray, u: complex, omega1: complex, omega2: complex) -> np.ndarray:
    """e^{ux} / ((1−e^{ω1x})(1−e^{ω2x}) x), rewritten for Re x > 0 to avoid overflow"""
    out = np.empty_like(x)
    right = x.real > 0
    xr = x[right]
    out[right] = np.exp((u - omega1 - omega2) * xr) / ((np.exp(-omega1 * xr) - 1.0) * (np.exp(-omega2 * xr) - 1.0)) / xr
    xl = x[~right]
    out[~right] = np.exp(u * xl) / ((1.0 - np.exp(omega1 * xl)) * (1.0 - np.exp(omega2 * xl))) / xl
    return out


def _panel_rule(a: float, b: float, panels: int, nodes: np.ndarray, weights: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    points = (mid[:, None] + half[:, None] * nodes[None, :]).reshape(-1)
    w = (half[:, None] * weights[None, :]).reshape(-1)
    return points, w


def _contour_integral(
    u: complex, omega1: complex, omega2: complex, radius: float, tails: Tuple[float, float], panels: int, gl_points: int
) -> complex:
    nodes, weights = leggauss(gl_points)
    left_end, right_end = tails

    total = 0.0 + 0.0j
    # [−L−, −r] and [r, L+]
    for a, b in ((-left_end, -radius), (radius, right_end)):
        points, w = _panel_rule(a, b, panels, nodes, weights)
        total += np.sum(w * _log_integrand(points.astype(np.complex128), u, omega1, omega2))

    # upper semicircle from −r to r: x = r e^{iθ}, θ from π down to 0
    theta_points, w = _panel_rule(0.0, math.pi, max(2, panels // 4), nodes, weights)
    x = radius * np.exp(1j * theta_points)
    total -= np.sum(w * _log_integrand(x, u, omega1, omega2) * 1j * x)
    return complex(total)


def hyperbolic_gamma_integral(
    u: complex,
    omega1: complex,
    omega2: complex,
    policy: Optional[TruncationPolicy] = None,
    tol: float = 1e-10,
) -> GammaValue:
    """
    Contour-integral form of γ(u;ω1,ω2)

    Args:
        u: point in the strip 0 < Re u < Re(ω1+ω2)
        omega1, omega2: periods with positive real parts
        tol: relative stability target of the exponentiated value

    The semicircle radius is the configured one, halved down to below the
    nearest nonzero pole when a period is large.

    Raises:
        DomainViolationError: outside the strip or for Re ω <= 0
        NonConvergenceError: when panel doubling does not stabilize
    """
    u, omega1, omega2 = complex(u), complex(omega1), complex(omega2)
    if omega1.real <= 0 or omega2.real <= 0:
        raise DomainViolationError("integral form needs Re(omega1), Re(omega2) > 0", location=omega1 if omega1.real <= 0 else omega2, bound=0.0)
    upper = (omega1 + omega2).real
    if not 0 < u.real < upper:
        raise DomainViolationError("integral form needs 0 < Re(u) < Re(omega1 + omega2)", location=u, bound=upper)

    quad_config = get_config().quadrature
    # nearest nonzero poles sit at 2πi/ω1 and 2πi/ω2
    pole_distance = 2 * math.pi / max(abs(omega1), abs(omega2))
    radius = quad_config.contour_radius
    if pole_distance <= radius:
        radius = 0.5 * pole_distance
        logger.debug(f"hyperbolic contour: radius shrunk to {radius:.3e}")

    tails = (radius + _TAIL_DECAY_UNITS / u.real, radius + _TAIL_DECAY_UNITS / (upper - u.real))
    panels = max(4, int(math.ceil(max(tails))))

    previous = None
    for doubling in range(quad_config.max_panel_doublings + 1):
        value = cmath.exp(-_contour_integral(u, omega1, omega2, radius, tails, panels, quad_config.gl_points))
        if previous is not None:
            change = abs(value - previous)
            logger.debug(f"hyperbolic contour: panels={panels} change={change:.3e}")
            if change <= tol * abs(value):
                return GammaValue(value, change)
        previous = value
        panels *= 2

    raise NonConvergenceError("hyperbolic gamma contour integral did not stabilize", location=u, bound=tol)


def hyperbolic_shift_residuals(
    u: complex, omega1: complex, omega2: complex, representation: str = "product",
    policy: Optional[TruncationPolicy] = None, tol: float = 1e-10,
) -> Tuple[float, float]:
    """
    Relative residuals of γ(u+ω1) = (1 − e^{2πiu/ω2}) γ(u) and γ(u+ω2) = (1 − e^{2πiu/ω1}) γ(u)
    """
    if representation == "product":
        def evaluate(v):
            return hyperbolic_gamma_product(v, omega1, omega2, policy).value
    elif representation == "integral":
        def evaluate(v):
            return hyperbolic_gamma_integral(v, omega1, omega2, policy, tol=tol).value
    else:
        raise DomainViolationError(f"unknown representation '{representation}'")

    base = evaluate(u)
    residuals = []
    for shift, other in ((omega1, omega2), (omega2, omega1)):
        lhs = evaluate(u + shift)
        rhs = (1.0 - cmath.exp(TWO_PI_I * u / other)) * base
        residuals.append(abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300))
    return residuals[0], residuals[1]
