"""
Tests for q-Pochhammer, elliptic gamma, Thomae–Jackson gamma and the Bernoulli polynomials
"""

import pytest

from core.errors import DomainViolationError, NonConvergenceError, PoleProximityError
from core.params import TruncationPolicy, make_base_pair
from domains.gamma.services.bernoulli import bernoulli_B22, bernoulli_B33
from domains.gamma.services.elliptic_gamma import (
    duplication_residual,
    ell_gamma,
    ell_gamma_array,
    ell_gamma_residue_limit,
    gamma_product,
)
from domains.gamma.services.pochhammer import qpoch_inf
from domains.gamma.services.q_gamma import thomae_jackson_gamma, thomae_jackson_shift_residuals
from domains.theta.services.identities import relative_gap
from domains.theta.services.theta_service import qpoch, theta


class TestPochhammer:

    def test_zero_argument(self):
        assert qpoch_inf(0, 0.5).value == 1

    def test_first_factor_split(self):
        lhs = qpoch_inf(0.5, 0.5).value
        rhs = (1 - 0.5) * qpoch_inf(0.25, 0.5).value
        assert relative_gap(lhs, rhs) < 1e-13

    def test_against_finite_product(self):
        assert relative_gap(qpoch_inf(0.3, 0.3).value, qpoch(0.3, 0.3, 64)) < 1e-14

    def test_rejects_unit_nome(self):
        with pytest.raises(DomainViolationError):
            qpoch_inf(0.3, 1.0)


class TestEllipticGamma:

    def test_p_zero_reduces_to_pochhammer(self):
        base = make_base_pair(0, 0.3)
        expected = 1 / qpoch_inf(0.4, 0.3).value
        assert relative_gap(ell_gamma(0.4, base).value, expected) < 1e-13

    def test_reflection(self, base):
        z = 0.5
        assert abs(ell_gamma(z, base).value * ell_gamma(base.pq / z, base).value - 1) < 1e-12

    def test_q_shift(self, base):
        z = 0.5
        ratio = ell_gamma(base.q * z, base).value / ell_gamma(z, base).value
        assert abs(ratio - theta(z, base.p)) < 1e-12

    def test_p_shift(self, base):
        z = 0.4 + 0.3j
        ratio = ell_gamma(base.p * z, base).value / ell_gamma(z, base).value
        assert relative_gap(ratio, theta(z, base.q)) < 1e-12

    def test_symmetric_in_nomes(self):
        z = 0.6 - 0.2j
        first = ell_gamma(z, make_base_pair(0.15, 0.25)).value
        second = ell_gamma(z, make_base_pair(0.25, 0.15)).value
        assert relative_gap(first, second) < 1e-13

    def test_inverted_regime_shift(self):
        base = make_base_pair(0.1, 2.5)
        assert base.inverted_q
        z = 0.5 + 0.2j
        ratio = ell_gamma(base.q * z, base).value / ell_gamma(z, base).value
        assert relative_gap(ratio, theta(z, base.p)) < 1e-11

    def test_pole_at_one(self):
        with pytest.raises(PoleProximityError):
            ell_gamma(1, make_base_pair(0.1, 0.2))

    def test_rejects_zero(self, base):
        with pytest.raises(DomainViolationError):
            ell_gamma(0, base)

    def test_array_and_product(self, base):
        args = [0.3, 0.5j, 0.7 - 0.1j]
        values = ell_gamma_array(args, base)
        product = gamma_product(args, base)
        assert relative_gap(complex(values[0] * values[1] * values[2]), product) < 1e-14

    @pytest.mark.parametrize("p, q, z", [
        (0.1, 0.2, 0.5),
        (0.5, 0.5, 0.5),
        (0.3, 0.8, 0.4 + 0.3j),
        (0.1, 2.5, 0.5 + 0.2j),
    ])
    @pytest.mark.parametrize("tol", [1e-15, 1e-8])
    def test_error_estimate_within_tol(self, p, q, z, tol):
        policy = TruncationPolicy(tol=tol)
        result = ell_gamma(z, make_base_pair(p, q), policy)
        assert 0 <= result.est_error <= tol * max(1.0, abs(result.value))

    @pytest.mark.parametrize("tol", [1e-6, 1e-10])
    def test_loose_tol_value_within_its_estimate(self, tol):
        base = make_base_pair(0.5, 0.5)
        reference = ell_gamma(0.5, base, TruncationPolicy(tol=1e-15)).value
        loose = ell_gamma(0.5, base, TruncationPolicy(tol=tol))
        assert abs(loose.value - reference) <= loose.est_error + 1e-13 * abs(reference)

    def test_term_cap_raises_non_convergence(self):
        with pytest.raises(NonConvergenceError):
            ell_gamma(0.5, make_base_pair(0.9, 0.9), TruncationPolicy(tol=1e-15, max_terms=8))

    def test_residue_limit_error_within_tol(self, base):
        result = ell_gamma_residue_limit(base, TruncationPolicy(tol=1e-15))
        assert 0 <= result.est_error <= 1e-15 * max(1.0, abs(result.value))

    def test_residue_limit(self, base):
        expected = 1 / (qpoch_inf(0.1, 0.1).value * qpoch_inf(0.2, 0.2).value)
        assert relative_gap(ell_gamma_residue_limit(base).value, expected) < 1e-12

    def test_residue_limit_p_zero(self):
        expected = 1 / qpoch_inf(0.5, 0.5).value
        assert relative_gap(ell_gamma_residue_limit(make_base_pair(0, 0.5)).value, expected) < 1e-12

    def test_residue_limit_approached_numerically(self, base):
        z = 1 - 1e-6
        approx = (1 - z) * ell_gamma(z, base).value
        assert relative_gap(approx, ell_gamma_residue_limit(base).value) < 1e-5

    @pytest.mark.parametrize("z", [0.6, 0.6j])
    def test_duplication(self, z):
        assert duplication_residual(z, make_base_pair(0.1, 0.15)) < 1e-11

    def test_duplication_pole(self):
        with pytest.raises(PoleProximityError):
            duplication_residual(1.0, make_base_pair(0.1, 0.15))


class TestThomaeJackson:

    def test_unit_value(self):
        assert abs(thomae_jackson_gamma(1, 0.4).value - 1) < 1e-13

    def test_shift_equations(self):
        first, second = thomae_jackson_shift_residuals(0.7 + 0.2j, 0.4)
        assert first < 1e-10
        assert second < 1e-10

    def test_pole(self):
        with pytest.raises(PoleProximityError):
            thomae_jackson_gamma(0, 0.5)

    def test_domain(self):
        with pytest.raises(DomainViolationError):
            thomae_jackson_gamma(0.5, 1.5)


class TestBernoulli:

    def test_b22_value(self):
        assert abs(bernoulli_B22(1, 1, 1) + 1 / 6) < 1e-15

    def test_b22_symmetries(self):
        u, m1, m2 = 0.3 + 0.2j, 1.1, 0.7 - 0.4j
        assert abs(bernoulli_B22(u, m1, m2) - bernoulli_B22(u, m2, m1)) < 1e-14
        assert abs(bernoulli_B22(m1 + m2 - u, m1, m2) - bernoulli_B22(u, m1, m2)) < 1e-13

    def test_b33_odd_about_center(self):
        mu = (1.0, 0.8 + 0.3j, 1.5j)
        assert abs(bernoulli_B33(sum(mu) / 2, *mu)) < 1e-13

    def test_b33_permutation(self):
        u, mu = 0.4 - 0.1j, (1.0, 0.8 + 0.3j, 1.5j)
        assert abs(bernoulli_B33(u, *mu) - bernoulli_B33(u, mu[2], mu[0], mu[1])) < 1e-13

    def test_b33_at_zero(self):
        assert abs(bernoulli_B33(0, 1, 1, 1) + 2.25) < 1e-15

    def test_zero_period(self):
        with pytest.raises(DomainViolationError):
            bernoulli_B22(1, 0, 1)
