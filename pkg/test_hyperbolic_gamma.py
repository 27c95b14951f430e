"""
Tests for the hyperbolic gamma function, product and contour-integral forms
"""

import pytest

from core.errors import DomainViolationError
from core.params import TruncationPolicy
from domains.gamma.services.hyperbolic_gamma import (
    hyperbolic_gamma_integral,
    hyperbolic_gamma_product,
    hyperbolic_shift_residuals,
)
from domains.theta.services.identities import relative_gap

OMEGA1 = 1.0 + 0.0j
OMEGA2 = 1.0 - 0.6j


def test_product_shift_equations():
    assert max(hyperbolic_shift_residuals(0.4 + 0.1j, OMEGA1, OMEGA2, "product")) < 1e-10


def test_product_symmetric_in_periods():
    u = 0.6 - 0.1j
    lhs = hyperbolic_gamma_product(u, OMEGA1, OMEGA2).value
    rhs = hyperbolic_gamma_product(u, OMEGA2, OMEGA1).value
    assert relative_gap(lhs, rhs) < 1e-9


@pytest.mark.parametrize("u", [0.5 + 0.1j, 0.9])
def test_integral_matches_product(u):
    product = hyperbolic_gamma_product(u, OMEGA1, OMEGA2).value
    integral = hyperbolic_gamma_integral(u, OMEGA1, OMEGA2).value
    assert relative_gap(product, integral) < 1e-6


def test_integral_large_periods_shrink_contour():
    # γ(λu; λω1, λω2) = γ(u; ω1, ω2) for real λ > 0; 2π/|7 ω2| is below the default radius
    scale = 7.0
    u = 0.5 + 0.1j
    product = hyperbolic_gamma_product(u, OMEGA1, OMEGA2).value
    integral = hyperbolic_gamma_integral(scale * u, scale * OMEGA1, scale * OMEGA2).value
    assert relative_gap(product, integral) < 1e-6


def test_product_error_estimate_from_tails():
    u = 0.4 + 0.1j
    tight = hyperbolic_gamma_product(u, OMEGA1, OMEGA2, TruncationPolicy(tol=1e-15))
    loose = hyperbolic_gamma_product(u, OMEGA1, OMEGA2, TruncationPolicy(tol=1e-6))
    assert 0 < tight.est_error < loose.est_error
    assert abs(loose.value - tight.value) <= loose.est_error + tight.est_error + 1e-13 * abs(tight.value)


def test_integral_shift_equations():
    assert max(hyperbolic_shift_residuals(0.4, OMEGA1, OMEGA2, "integral")) < 1e-6


def test_product_needs_nonreal_ratio():
    with pytest.raises(DomainViolationError):
        hyperbolic_gamma_product(0.5, 1.0, 2.0)


def test_integral_strip_bound():
    with pytest.raises(DomainViolationError):
        hyperbolic_gamma_integral(2.1, 1.0, 1.0)


def test_integral_needs_positive_periods():
    with pytest.raises(DomainViolationError):
        hyperbolic_gamma_integral(0.5, -1.0, 1.0)
