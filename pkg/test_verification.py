"""
Tests for the verification suite registry and small seeded suite runs
"""

import pytest

from core.errors import DomainViolationError, PoleProximityError
from verification import SUITE_REGISTRY, BaseSuite, CaseResult, SuiteConfig, create_suite, get_suite_class
from verification.term_suites import BRIDGE_THRESHOLD


def run(name, **config):
    results = create_suite(name, SuiteConfig(**config)).run()
    failed = [case.to_dict() for case in results if not case.passed]
    assert failed == []
    return results


class TestRegistry:

    def test_all_suites_registered(self):
        assert set(SUITE_REGISTRY) == {
            "beta", "v-reduction", "trafo-bc", "trafo-a", "rec-1", "rec-2", "kernel-qdiff",
            "sl3z", "gamma-identities", "theta-identities", "hyp-cross", "ellipticity", "modular",
        }
        for name, suite_class in SUITE_REGISTRY.items():
            assert issubclass(suite_class, BaseSuite)
            assert suite_class.name == name

    def test_lookup_is_case_insensitive(self):
        assert get_suite_class("BETA") is SUITE_REGISTRY["beta"]

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="Unknown suite"):
            create_suite("nonexistent")

    @pytest.mark.parametrize("config", [{"tol": 0.0}, {"n": -1}, {"cases": 0}])
    def test_invalid_config(self, config):
        with pytest.raises(ValueError):
            SuiteConfig(**config)

    @pytest.mark.parametrize("name", ["trafo-bc", "trafo-a", "rec-1", "rec-2", "ellipticity"])
    def test_unsupported_ranks_rejected_up_front(self, name):
        with pytest.raises(DomainViolationError):
            create_suite(name, SuiteConfig(n=3, m=0))

    def test_default_cases(self):
        suite = create_suite("theta-identities")
        assert suite.cases == 100
        assert suite.get_stats()["cases"] == 100


class TestBaseSuite:

    def test_check_records_evaluation_errors(self):
        suite = create_suite("beta", SuiteConfig(cases=1))

        def compute():
            raise PoleProximityError("pole", location=1.0)

        case = suite.check("raising", 1e-8, compute)
        assert not case.passed
        assert case.residual is None
        assert case.error.startswith("PoleProximity")

    def test_check_accepts_bare_residuals(self):
        suite = create_suite("beta", SuiteConfig(cases=1))
        case = suite.check("bare", 1e-8, lambda: 1e-9, label="x")
        assert case.passed
        assert case.detail == {"label": "x"}

    def test_case_result_dict(self):
        case = CaseResult(name="c", residual=2e-9, threshold=1e-8, passed=True)
        assert case.to_dict() == {"name": "c", "residual": 2e-9, "threshold": 1e-8, "pass": True}

    def test_same_seed_same_results(self):
        first = [case.residual for case in create_suite("kernel-qdiff", SuiteConfig(seed=5, cases=2)).run()]
        second = [case.residual for case in create_suite("kernel-qdiff", SuiteConfig(seed=5, cases=2)).run()]
        assert first == second


class TestFunctionSuites:

    def test_theta_identities(self):
        assert len(run("theta-identities", cases=2)) == 12

    def test_gamma_identities(self):
        assert len(run("gamma-identities", cases=2)) == 12

    def test_sl3z(self):
        assert len(run("sl3z", cases=1)) == 4

    @pytest.mark.slow
    def test_hyperbolic_cross(self):
        assert len(run("hyp-cross", cases=1)) == 4


class TestTermSuites:

    def test_ellipticity(self):
        results = run("ellipticity", cases=1)
        names = [case.name for case in results]
        assert names[0] == "diophantine beta"
        assert sum(name.startswith("mutation") for name in names) == 29
        bridges = [case for case in results if case.name.startswith("bridge")]
        assert len(bridges) == 2
        assert all(case.threshold == BRIDGE_THRESHOLD for case in bridges)

    def test_modular(self):
        assert len(run("modular", cases=1)) == 2


class TestIntegralSuites:

    def test_kernel_qdiff(self):
        assert len(run("kernel-qdiff", cases=3)) == 6

    def test_beta(self):
        assert len(run("beta", cases=1)) == 1

    @pytest.mark.slow
    def test_trafo_bc_rank_one(self):
        run("trafo-bc", n=1, m=0)

    @pytest.mark.slow
    def test_trafo_a_rank_one(self):
        assert len(run("trafo-a", n=1, m=0)) == 2

    @pytest.mark.slow
    def test_recurrences(self):
        run("rec-1", n=1, m=0, cases=1)
        run("rec-2", n=1, m=0, cases=1)

    @pytest.mark.slow
    def test_v_reduction(self):
        run("v-reduction", cases=1)
