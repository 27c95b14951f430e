"""
Tests for trapezoid quadrature on the unit torus
"""

import numpy as np
import pytest

from core.errors import DomainViolationError, NonConvergenceError, PoleProximityError
from core.params import make_base_pair
from domains.integrals.models.params import BetaParams
from domains.integrals.services.integrals import elliptic_beta
from domains.integrals.services.sampling import sample_base, sample_beta_params
from domains.quad.models.quadrature import PoleFamily, QuadratureResult, TorusIntegrand, constant_result
from domains.quad.services.torus import (
    integrate_torus,
    pairwise_sum,
    product_integrand,
    screen_poles,
    torus_nodes,
)


def one_dimensional(evaluate, label="f"):
    return TorusIntegrand(dimension=1, evaluate=lambda grids: evaluate(grids[0]), label=label)


class TestIntegrateTorus:

    def test_constant(self):
        result = integrate_torus(TorusIntegrand(dimension=2, evaluate=lambda grids: 1.0))
        assert result.value == pytest.approx(1.0, abs=1e-15)
        assert result.err_est < 1e-15

    def test_nonzero_fourier_mode_vanishes(self):
        result = integrate_torus(one_dimensional(lambda z: z ** 3))
        assert abs(result.value) < 1e-14

    def test_geometric_series(self):
        result = integrate_torus(one_dimensional(lambda z: 1.0 / (1.0 - 0.5 * z)), N0=64)
        assert abs(result.value - 1.0) < 1e-13
        assert result.N == 128
        assert result.evaluations == 64 + 128

    def test_product_matches_one_dimensional_results(self):
        f = one_dimensional(lambda z: 2.0 + z + 1.0 / (1.0 - 0.5 * z), label="f")
        g = one_dimensional(lambda z: 1.0 + 0.3 / z + 1.0 / (1.0 - 0.25 / z), label="g")
        joint = integrate_torus(product_integrand((f, g)))
        separate = integrate_torus(f).value * integrate_torus(g).value
        assert abs(joint.value - separate) < 1e-12
        assert abs(joint.value - 6.0) < 1e-12

    def test_threaded_levels_are_bitwise_identical(self):
        f = TorusIntegrand(dimension=2, evaluate=lambda grids: grids[0] / (2.0 - grids[1]) + 1.0 / (3.0 - grids[0]))
        serial = integrate_torus(f, N0=256, Nmax=512, workers=1, tol=1.0)
        threaded = integrate_torus(f, N0=256, Nmax=512, workers=4, tol=1.0)
        assert serial.value == threaded.value

    def test_non_convergence(self):
        f = one_dimensional(lambda z: 1.0 / (1.0 - 0.999 * z))
        with pytest.raises(NonConvergenceError):
            integrate_torus(f, N0=16, Nmax=32, screen=False)

    def test_screening_raises_before_evaluation(self):
        calls = []

        def evaluate(grids):
            calls.append(1)
            return 1.0

        f = TorusIntegrand(
            dimension=1, evaluate=evaluate, p=0.1, q=0.2,
            poles=[PoleFamily(exponents=(1,), anchor=0.999, outward=False, label="near")],
        )
        with pytest.raises(PoleProximityError):
            integrate_torus(f)
        assert calls == []

    def test_dimension_bounds(self):
        with pytest.raises(DomainViolationError):
            TorusIntegrand(dimension=4, evaluate=lambda grids: 1.0)


class TestScreenPoles:

    @pytest.mark.parametrize("anchor, outward", [(0.5, False), (2.0, True), (0.9j, False)])
    def test_safe_families(self, anchor, outward):
        f = TorusIntegrand(
            dimension=1, evaluate=lambda grids: 1.0, p=0.1, q=0.2,
            poles=[PoleFamily(exponents=(1,), anchor=anchor, outward=outward)],
        )
        assert screen_poles(f) == []

    @pytest.mark.parametrize("anchor, outward", [(0.999, False), (1.01, True), (1.5, False), (0.5, True)])
    def test_offending_families(self, anchor, outward):
        family = PoleFamily(exponents=(1,), anchor=anchor, outward=outward)
        f = TorusIntegrand(dimension=1, evaluate=lambda grids: 1.0, p=0.1, q=0.2, poles=[family])
        assert screen_poles(f) == [family]

    def test_margin_override(self):
        family = PoleFamily(exponents=(1,), anchor=0.9, outward=False)
        f = TorusIntegrand(dimension=1, evaluate=lambda grids: 1.0, p=0.1, q=0.2, poles=[family])
        assert screen_poles(f, margin=0.05) == []
        assert screen_poles(f, margin=0.2) == [family]

    def test_members(self):
        family = PoleFamily(exponents=(1,), anchor=0.5, outward=True)
        members = family.members(0.5, 0.25, scan=1)
        assert sorted(np.abs(members)) == pytest.approx([0.5, 1.0, 2.0, 4.0])


class TestHelpers:

    def test_pairwise_sum(self):
        values = np.arange(7) + 1j
        assert pairwise_sum(values) == 21 + 7j
        assert pairwise_sum(np.array([])) == 0j

    def test_nodes_are_offset(self):
        nodes = torus_nodes(4)
        assert np.allclose(np.abs(nodes), 1.0)
        assert not np.any(np.isclose(nodes, 1.0))

    def test_scaled_result(self):
        result = QuadratureResult(value=2 + 1j, err_est=1e-12, N=32, evaluations=48, history=[1e-6, 1e-12])
        scaled = result.scaled(-2.0)
        assert scaled.value == -4 - 2j
        assert scaled.err_est == pytest.approx(2e-12)
        assert scaled.to_dict() == {"value": [-4.0, -2.0], "err_est": scaled.err_est, "N": 32, "evaluations": 48}

    def test_constant_result(self):
        assert constant_result(3.0).to_dict() == {"value": [3.0, 0.0], "err_est": 0.0, "N": 0, "evaluations": 0}


class TestSpectralConvergence:

    @staticmethod
    def levels(result):
        return [result.N >> (len(result.history) - 1 - i) for i in range(len(result.history))]

    def assert_geometric(self, result):
        assert len(result.history) >= 2
        for level, previous, current in zip(self.levels(result), result.history, result.history[1:]):
            if level >= 32:
                assert current / previous < 0.5

    def test_beta_kernel_fixed_case(self):
        params = BetaParams.from_free((0.5, 0.6, 0.55 + 0.1j, 0.4 - 0.2j, 0.7), make_base_pair(0.1, 0.1))
        self.assert_geometric(elliptic_beta(params, tol=1e-13))

    def test_beta_kernel_random_cases(self, rng):
        for _ in range(3):
            base = sample_base(rng)
            self.assert_geometric(elliptic_beta(sample_beta_params(base, rng), tol=1e-13))
