"""
Verification suites for the integral identities
"""

import cmath
import logging
import math
from typing import List

from core.params import make_base_pair
from domains.integrals.models.params import check_ranks
from domains.integrals.models.results import IdentityCheck
from domains.integrals.services.identities import (
    v_reduction_residual,
    verify_kernel_qdiff,
    verify_recurrence_I,
    verify_recurrence_II,
    verify_trafo_A,
    verify_trafo_BC,
)
from domains.integrals.services.integrals import elliptic_beta
from domains.integrals.services.sampling import (
    sample_a_transformation,
    sample_base,
    sample_bc_transformation,
    sample_beta_params,
    sample_kernel_point,
    sample_recurrence_I,
    sample_recurrence_II,
    sample_v_reduction,
)
from verification.base_suite import BaseSuite, CaseResult

logger = logging.getLogger(__name__)


def _rank_threshold(n: int, m: int) -> float:
    """Residual thresholds grow with the torus dimensions involved"""
    if n + m <= 1:
        return 1e-7
    if max(n, m) == 1:
        return 1e-6
    return 1e-5


class BetaSuite(BaseSuite):
    """Elliptic beta integral equals 1 for random admissible parameters"""

    name = "beta"
    default_cases = 10
    threshold = 1e-8

    def run_cases(self) -> List[CaseResult]:
        results = []
        for case in range(self.cases):
            base = sample_base(self.rng)
            params = sample_beta_params(base, self.rng)

            def compute(params=params):
                value = elliptic_beta(params, tol=self.config.tol)
                return IdentityCheck(residual=abs(value.value - 1.0), lhs=value.value, rhs=1.0 + 0.0j,
                                     err_est=value.err_est)

            results.append(self.check(f"beta[{case}]", self.threshold, compute))
        return results


class VReductionSuite(BaseSuite):
    """V with t7 t8 = pq against the product of Γ(t_i t_j)"""

    name = "v-reduction"
    default_cases = 5
    threshold = 1e-8

    def run_cases(self) -> List[CaseResult]:
        results = []
        for case in range(self.cases):
            base = sample_base(self.rng)
            free, t7 = sample_v_reduction(base, self.rng)
            results.append(self.check(
                f"v-reduction[{case}]", self.threshold,
                lambda free=free, t7=t7, base=base: v_reduction_residual(free, t7, base, tol=self.config.tol),
            ))
        return results


def _transformation_base(n: int, m: int):
    nome = 0.3 if max(n, m) <= 1 else 0.1
    return make_base_pair(nome, nome)


class TrafoBCSuite(BaseSuite):
    """BC_n (n, m) ↔ (m, n) transformation"""

    name = "trafo-bc"
    default_cases = 1

    def validate(self) -> None:
        check_ranks(self.config.n, self.config.m)

    def run_cases(self) -> List[CaseResult]:
        n, m = self.config.n, self.config.m
        base = _transformation_base(n, m)
        results = []
        for case in range(self.cases):
            params = sample_bc_transformation(n, m, base, self.rng)
            results.append(self.check(
                f"trafo-bc({n},{m})[{case}]", _rank_threshold(n, m),
                lambda params=params: verify_trafo_BC(n, m, params.t, base, tol=self.config.tol),
            ))
        return results


class TrafoASuite(BaseSuite):
    """A_n (n, m) ↔ (m, n) transformation plus a root-branch rotation"""

    name = "trafo-a"
    default_cases = 1

    def validate(self) -> None:
        check_ranks(self.config.n, self.config.m)

    def run_cases(self) -> List[CaseResult]:
        n, m = self.config.n, self.config.m
        base = _transformation_base(n, m)
        threshold = _rank_threshold(n, m)
        results = []
        for case in range(self.cases):
            params = sample_a_transformation(n, m, base, self.rng)
            results.append(self.check(
                f"trafo-a({n},{m})[{case}]", threshold,
                lambda params=params: verify_trafo_A(n, m, params.s, params.t, base, tol=self.config.tol),
            ))
            if n > 0:
                # c^{n+1} = 1 keeps ∏ z = 1 under z → c z
                rotated = params.rotated(cmath.exp(2j * math.pi / (n + 1)))
                results.append(self.check(
                    f"trafo-a({n},{m})[{case}] rotated", threshold,
                    lambda rotated=rotated: verify_trafo_A(n, m, rotated.s, rotated.t, base, tol=self.config.tol),
                ))
        return results


class RecurrenceISuite(BaseSuite):
    """First contiguous relation over random index sets of size n+2"""

    name = "rec-1"
    default_cases = 3

    def validate(self) -> None:
        check_ranks(self.config.n, self.config.m)

    def run_cases(self) -> List[CaseResult]:
        n, m = self.config.n, self.config.m
        base = make_base_pair(0.1, 0.3)
        threshold = 1e-6 if m == 0 else 1e-5
        results = []
        for case in range(self.cases):
            t, indices = sample_recurrence_I(n, m, base, self.rng)
            results.append(self.check(
                f"rec-1({n},{m})[{case}]", threshold,
                lambda t=t, indices=indices: verify_recurrence_I(n, m, t, indices, base, tol=self.config.tol),
                indices=indices,
            ))
        return results


class RecurrenceIISuite(BaseSuite):
    """Second contiguous relation over random index sets of size m+2"""

    name = "rec-2"
    default_cases = 3

    def validate(self) -> None:
        check_ranks(self.config.n, self.config.m)

    def run_cases(self) -> List[CaseResult]:
        n, m = self.config.n, self.config.m
        base = make_base_pair(0.1, 0.4)
        threshold = 1e-6 if m == 0 else 1e-5
        results = []
        for case in range(self.cases):
            t, indices = sample_recurrence_II(n, m, base, self.rng)
            results.append(self.check(
                f"rec-2({n},{m})[{case}]", threshold,
                lambda t=t, indices=indices: verify_recurrence_II(n, m, t, indices, base, tol=self.config.tol),
                indices=indices,
            ))
        return results


class KernelQDiffSuite(BaseSuite):
    """Pointwise q-difference equation of the beta kernel and its p-partner"""

    name = "kernel-qdiff"
    default_cases = 20
    threshold = 1e-9

    def run_cases(self) -> List[CaseResult]:
        base = make_base_pair(0.1, 0.15)
        results = []
        for case in range(self.cases):
            x, t = sample_kernel_point(self.rng)
            for partner in (False, True):
                label = "p-partner" if partner else "q"
                results.append(self.check(
                    f"kernel-qdiff[{case}] {label}", self.threshold,
                    lambda x=x, t=t, partner=partner: verify_kernel_qdiff(x, t, base, partner=partner),
                ))
        return results
