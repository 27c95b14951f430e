"""
Tests for the modified elliptic gamma function in both representations
"""

import pytest

from core.errors import DomainViolationError
from core.params import make_omega_triple
from domains.gamma.services.modified_gamma import (
    REPRESENTATIONS,
    degeneration_gap,
    ell_gamma_additive_residuals,
    modified_G,
    modified_G_equation_residuals,
    sample_admissible_omega,
    sl3z_residual,
)


def _point(omega, a=0.3, b=0.4, c=0.2):
    return a * omega.omega1 + b * omega.omega2 + c * omega.omega3


@pytest.mark.parametrize("representation", REPRESENTATIONS)
def test_normalization(omega, representation):
    center = sum(omega.omegas) / 2
    assert abs(modified_G(center, omega, representation).value - 1) < 1e-10


def test_representations_agree(omega):
    assert sl3z_residual(_point(omega), omega) < 1e-8


def test_representations_agree_on_sampled_triples(rng):
    for _ in range(3):
        omega = sample_admissible_omega(rng)
        assert sl3z_residual(_point(omega, 0.5, 0.2, 0.6), omega) < 1e-8


@pytest.mark.parametrize("representation", REPRESENTATIONS)
def test_defining_equations(rng, representation):
    omega = sample_admissible_omega(rng)
    assert max(modified_G_equation_residuals(_point(omega), omega, representation)) < 1e-8


def test_degeneration_to_hyperbolic(omega):
    assert abs(omega.p) <= 1e-6 and abs(omega.r) <= 1e-6
    assert degeneration_gap(0.3 + 0.1j, omega) < 1e-4


def test_additive_gamma_equations(omega):
    assert max(ell_gamma_additive_residuals(0.2 + 0.1j, omega)) < 1e-10


def test_product_form_needs_small_q():
    triple = make_omega_triple(1, 1 + 0.6j, 3.1j)
    with pytest.raises(DomainViolationError):
        modified_G(0.3, triple, "product")


def test_unknown_representation(omega):
    with pytest.raises(DomainViolationError):
        modified_G(0.3, omega, "series")
