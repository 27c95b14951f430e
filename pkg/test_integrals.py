"""
Tests for the elliptic hypergeometric integrals and their identities

Cases marked slow run full torus quadratures of dimension two or more.
"""

import math

import numpy as np
import pytest

from core.errors import DomainViolationError, PoleProximityError
from core.params import make_base_pair
from domains.gamma.services.elliptic_gamma import gamma_product
from domains.integrals.models.params import AParams, BCParams, BetaParams, VParams, check_ranks
from domains.integrals.services.identities import (
    kernel_g,
    rho_bridge_residual_A,
    rho_bridge_residual_BC,
    v_reduction_residual,
    verify_kernel_qdiff,
    verify_recurrence_I,
    verify_recurrence_II,
    verify_trafo_A,
    verify_trafo_BC,
)
from domains.integrals.services.integrals import I_A, I_BC, V, elliptic_beta
from domains.integrals.services.kernels import kappa_BC, mu_A, nome_constant
from domains.integrals.services.sampling import (
    MODULUS_CAP,
    sample_a_transformation,
    sample_base,
    sample_bc_transformation,
    sample_beta_params,
    sample_kernel_point,
    sample_recurrence_I,
    sample_recurrence_II,
    sample_v_reduction,
)
from domains.theta.services.identities import relative_gap

BETA_BASE = make_base_pair(0.1, 0.1)
PASSING_T = (0.5, 0.6, 0.55 + 0.1j, 0.4 - 0.2j, 0.7)

V_BASE = make_base_pair(0.2, 0.35)
V_FREE = (0.5, 0.6, 0.55 + 0.1j, 0.4 - 0.2j, 0.7, 0.5j, 0.6)


class TestParams:

    def test_beta_balancing_is_derived(self):
        params = BetaParams.from_free(PASSING_T, BETA_BASE)
        assert abs(np.prod(params.t) - BETA_BASE.pq) < 1e-15
        assert abs(params.t[5]) < 1

    def test_beta_rejects_unbalanced(self):
        with pytest.raises(DomainViolationError):
            BetaParams(t=PASSING_T + (0.5,), base=BETA_BASE)

    def test_beta_rejects_outside_unit_disc(self):
        with pytest.raises(DomainViolationError):
            BetaParams.from_free((0.1, 0.1, 0.1, 0.1, 0.1), BETA_BASE)

    def test_integrals_need_q_inside(self):
        with pytest.raises(DomainViolationError):
            BetaParams.from_free(PASSING_T, make_base_pair(0.1, 2.0))

    def test_v_balancing(self):
        free = (0.5, 0.6, 0.55, 0.4, 0.7, 0.5, 0.6)
        params = VParams.from_free(free, make_base_pair(0.3, 0.3))
        assert abs(np.prod(params.t) / 0.09 ** 2 - 1) < 1e-14

    @pytest.mark.parametrize("n, m", [(3, 0), (0, 3), (2, 2), (-1, 0)])
    def test_unsupported_ranks(self, n, m):
        with pytest.raises(DomainViolationError):
            check_ranks(n, m)

    @pytest.mark.parametrize("n, m", [(0, 0), (1, 2), (2, 1)])
    def test_supported_ranks(self, n, m):
        check_ranks(n, m)

    def test_bc_transformed_parameters(self):
        base = make_base_pair(0.3, 0.3)
        params = sample_bc_transformation(1, 1, base, np.random.default_rng(3))
        partner = params.transformed()
        assert (partner.n, partner.m) == (1, 1)
        assert all(abs(a * b - 0.3) < 1e-14 for a, b in zip(params.t, partner.t))

    def test_a_roots_multiply_to_pq(self):
        base = make_base_pair(0.3, 0.3)
        params = sample_a_transformation(1, 1, base, np.random.default_rng(3))
        sigma, tau = params.roots()
        assert abs(sigma * tau - base.pq) < 1e-15
        assert abs(sigma ** 2 - params.S) < 1e-14 * abs(params.S)

    def test_a_rotation_keeps_balancing(self):
        base = make_base_pair(0.3, 0.3)
        params = sample_a_transformation(1, 0, base, np.random.default_rng(3))
        rotated = params.rotated(-1.0)
        assert abs(rotated.S * rotated.T - params.S * params.T) < 1e-15


class TestNormalization:

    def test_nome_constants(self, base):
        c = nome_constant(base)
        assert kappa_BC(2, base) == pytest.approx(c ** 2 / 8)
        assert mu_A(2, base) == pytest.approx(c ** 2 / 6)
        assert kappa_BC(0, base) == 1

    def test_empty_bc_integral(self):
        params = BCParams.from_free(0, 1, (0.5, 0.6, 0.4, 0.7, 0.8), make_base_pair(0.3, 0.3))
        result = I_BC(params)
        assert result.value == 1
        assert result.N == 0

    def test_empty_a_integral_is_kernel_at_one(self):
        base = make_base_pair(0.3, 0.3)
        s = (0.5, 0.6 + 0.1j, 0.4)
        params = AParams.from_free(0, 1, s, (0.7, 0.8), base)
        expected = gamma_product(list(params.s) + list(params.t), base)
        assert abs(I_A(params).value / expected - 1) < 1e-12


class TestEllipticBeta:

    def test_closed_form_value(self):
        result = elliptic_beta(BetaParams.from_free(PASSING_T, BETA_BASE))
        assert abs(result.value - 1) < 1e-8
        assert result.err_est < 1e-8

    def test_parameter_close_to_circle(self):
        # |t6| ≈ 0.993 sits inside the screening margin
        params = BetaParams.from_free((0.3, 0.4, 0.5, 0.35 + 0.1j, 0.45 - 0.1j), BETA_BASE)
        with pytest.raises(PoleProximityError):
            elliptic_beta(params)

    def test_free_parameter_close_to_circle(self):
        params = BetaParams.from_free((0.999, 0.6, 0.55 + 0.1j, 0.4 - 0.2j, 0.7), BETA_BASE)
        with pytest.raises(PoleProximityError):
            elliptic_beta(params)

    def test_random_parameters(self, rng):
        for _ in range(3):
            base = sample_base(rng)
            params = sample_beta_params(base, rng)
            assert all(abs(v) <= MODULUS_CAP for v in params.t)
            assert abs(elliptic_beta(params).value - 1) < 1e-8

    def test_agrees_with_rank_one_bc_integral(self, rng):
        base = make_base_pair(0.2, 0.25)
        params = sample_beta_params(base, rng)
        beta = elliptic_beta(params).value
        bc = I_BC(BCParams(n=1, m=0, t=params.t, base=base)).value
        assert abs(beta - bc) < 1e-9


class TestSymmetries:

    @pytest.fixture
    def v_params(self):
        return VParams.from_free(V_FREE, V_BASE)

    def test_v_permutation_invariance(self, v_params, rng):
        reference = V(v_params).value
        for _ in range(3):
            order = rng.permutation(8)
            permuted = VParams(t=tuple(v_params.t[i] for i in order), base=V_BASE)
            assert relative_gap(V(permuted).value, reference) < 1e-10

    def test_v_nome_swap(self, v_params):
        swapped = VParams(t=v_params.t, base=make_base_pair(V_BASE.q, V_BASE.p))
        assert relative_gap(V(swapped).value, V(v_params).value) < 1e-10

    def test_bc_rank_one_equals_v(self, v_params):
        bc = I_BC(BCParams(n=1, m=1, t=v_params.t, base=V_BASE)).value
        assert relative_gap(bc, V(v_params).value) < 1e-10

    def test_a_rank_one_equals_v(self, v_params):
        a = I_A(AParams(n=1, m=1, s=v_params.t[:4], t=v_params.t[4:], base=V_BASE)).value
        assert relative_gap(a, V(v_params).value) < 1e-10

    def test_a_symmetric_in_s_and_t(self, v_params):
        s, t = v_params.t[:4], v_params.t[4:]
        forward = I_A(AParams(n=1, m=1, s=s, t=t, base=V_BASE)).value
        backward = I_A(AParams(n=1, m=1, s=t, t=s, base=V_BASE)).value
        assert relative_gap(forward, backward) < 1e-10

    def test_beta_permutation_invariance(self):
        params = BetaParams.from_free(PASSING_T, BETA_BASE)
        reversed_params = BetaParams(t=tuple(reversed(params.t)), base=BETA_BASE)
        assert abs(elliptic_beta(reversed_params).value - elliptic_beta(params).value) < 1e-10


class TestKernelIdentities:

    @pytest.mark.parametrize("partner", [False, True])
    def test_qdifference(self, rng, partner):
        base = make_base_pair(0.1, 0.15)
        for _ in range(5):
            x, t = sample_kernel_point(rng)
            assert verify_kernel_qdiff(x, t, base, partner=partner).residual < 1e-9

    def test_qdifference_needs_five_parameters(self):
        with pytest.raises(DomainViolationError):
            verify_kernel_qdiff(1j, [0.5] * 4, make_base_pair(0.1, 0.15))

    def test_kernel_coefficient_pole(self):
        with pytest.raises(PoleProximityError):
            kernel_g(1.0, [0.5, 0.6, 0.4, 0.3, 0.7], 0.1)

    def test_rho_bc_bridge(self, rng):
        base = make_base_pair(0.2, 0.3)
        params = sample_bc_transformation(1, 1, base, rng)
        z, y = [np.exp(0.7j)], [np.exp(-2.1j)]
        assert rho_bridge_residual_BC(params, z, y) < 1e-9

    def test_rho_a_bridge(self, rng):
        base = make_base_pair(0.2, 0.3)
        params = sample_a_transformation(1, 1, base, rng)
        z, y = [np.exp(0.4j)], [np.exp(1.3j)]
        assert rho_bridge_residual_A(params, z, y) < 1e-9

    def test_bridge_point_shape(self, rng):
        params = sample_bc_transformation(1, 1, make_base_pair(0.2, 0.3), rng)
        with pytest.raises(DomainViolationError):
            rho_bridge_residual_BC(params, [1j, -1j], [1j])


class TestRecurrences:

    def test_coinciding_parameters(self):
        p = 0.1
        free = [0.5, 0.5, 0.4, 0.6, 0.7]
        t = free + [p / math.prod(free)]
        with pytest.raises(DomainViolationError):
            verify_recurrence_I(1, 0, t, [0, 1, 2], make_base_pair(p, 0.3))

    def test_unbalanced_input(self):
        with pytest.raises(DomainViolationError):
            verify_recurrence_I(1, 0, [0.5] * 6, [0, 1, 2], make_base_pair(0.1, 0.3))

    def test_index_set_size(self, rng):
        base = make_base_pair(0.1, 0.3)
        t, _ = sample_recurrence_I(1, 0, base, rng)
        with pytest.raises(DomainViolationError):
            verify_recurrence_I(1, 0, t, [0, 1], base)

    @pytest.mark.slow
    @pytest.mark.parametrize("n, m, threshold", [(1, 0, 1e-6), (1, 1, 1e-5)])
    def test_first_recurrence(self, rng, n, m, threshold):
        base = make_base_pair(0.1, 0.3)
        t, indices = sample_recurrence_I(n, m, base, rng)
        assert verify_recurrence_I(n, m, t, indices, base).residual < threshold

    @pytest.mark.slow
    @pytest.mark.parametrize("n, m, threshold", [(1, 0, 1e-6), (1, 1, 1e-5)])
    def test_second_recurrence(self, rng, n, m, threshold):
        base = make_base_pair(0.1, 0.4)
        t, indices = sample_recurrence_II(n, m, base, rng)
        assert verify_recurrence_II(n, m, t, indices, base).residual < threshold


class TestTransformations:

    def test_bc_rank_zero_sides(self, rng):
        base = make_base_pair(0.3, 0.3)
        params = sample_bc_transformation(0, 0, base, rng)
        check = verify_trafo_BC(0, 0, params.t, base)
        assert check.residual < 1e-10

    @pytest.mark.slow
    @pytest.mark.parametrize("n, m, nome, threshold", [
        (1, 0, 0.3, 1e-7),
        (1, 1, 0.3, 1e-6),
        (2, 0, 0.1, 1e-5),
    ])
    def test_bc(self, rng, n, m, nome, threshold):
        base = make_base_pair(nome, nome)
        params = sample_bc_transformation(n, m, base, rng)
        check = verify_trafo_BC(n, m, params.t, base)
        assert check.residual < threshold

    @pytest.mark.slow
    @pytest.mark.parametrize("n, m, threshold", [(1, 0, 1e-7), (1, 1, 1e-6)])
    def test_a(self, rng, n, m, threshold):
        base = make_base_pair(0.3, 0.3)
        params = sample_a_transformation(n, m, base, rng)
        assert verify_trafo_A(n, m, params.s, params.t, base).residual < threshold
        # c^{n+1} = 1 for c = -1 at n = 1
        rotated = params.rotated(-1.0)
        assert verify_trafo_A(n, m, rotated.s, rotated.t, base).residual < threshold

    @pytest.mark.slow
    def test_v_reduction(self, rng):
        base = sample_base(rng)
        free, t7 = sample_v_reduction(base, rng)
        assert v_reduction_residual(free, t7, base).residual < 1e-8

    def test_v_reduction_needs_five_parameters(self):
        with pytest.raises(DomainViolationError):
            v_reduction_residual([0.5] * 4, 0.6, make_base_pair(0.2, 0.2))
