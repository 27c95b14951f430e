"""
Verification suites for elliptic hypergeometric terms
"""

import logging
import math
from typing import List

import numpy as np

from core.params import make_base_pair
from domains.gamma.services.modified_gamma import sample_admissible_omega
from domains.integrals.models.params import check_ranks
from domains.integrals.services.identities import rho_bridge_residual_A, rho_bridge_residual_BC
from domains.integrals.services.sampling import sample_a_transformation, sample_bc_transformation
from domains.terms.services.builders import beta_term_spec, rho_A_term_spec, rho_BC_term_spec
from domains.terms.services.diophantine import check_total_ellipticity, mutation_reports
from domains.terms.services.ellipticity import (
    ellipticity_sweep,
    modular_sweep,
    sample_gamma_point,
    verify_modular_transform,
)
from verification.base_suite import BaseSuite, CaseResult

logger = logging.getLogger(__name__)

# Kernel ratio against the rho term at matched points
BRIDGE_THRESHOLD = 1e-9


class EllipticitySuite(BaseSuite):
    """
    Diophantine check of the beta term with its single-flip mutations, the
    numeric certificate sweep of the BC and A ratios, and the kernel-ratio
    bridge of both ratios
    """

    name = "ellipticity"
    default_cases = 10
    threshold = 1e-8

    def validate(self) -> None:
        check_ranks(max(self.config.n, 1), max(self.config.m, 1))

    def run_cases(self) -> List[CaseResult]:
        beta = beta_term_spec()
        report = check_total_ellipticity(beta)
        results = [CaseResult(
            name="diophantine beta", residual=float(len(report.violations)), threshold=0.5,
            passed=report.passed, detail={"n": report.n, "K": report.K},
        )]
        for index, mutated in mutation_reports(beta):
            results.append(CaseResult(
                name=f"mutation[{index}] detected", residual=None, threshold=0.0,
                passed=not mutated.passed, detail={"violations": len(mutated.violations)},
            ))

        base = make_base_pair(0.2, 0.3)
        n, m = max(self.config.n, 1), max(self.config.m, 1)
        for term in (rho_BC_term_spec(n, m), rho_A_term_spec(n, m)):
            results.append(self.check(
                f"numeric {term.name}", self.threshold,
                lambda term=term: ellipticity_sweep(term, base, self.rng, points=self.cases).worst,
            ))

        bc = sample_bc_transformation(n, m, base, self.rng)
        z, y = self._torus_point(n), self._torus_point(m)
        results.append(self.check(
            f"bridge rho-bc({n},{m})", BRIDGE_THRESHOLD, lambda: rho_bridge_residual_BC(bc, z, y),
        ))
        a = sample_a_transformation(n, m, base, self.rng)
        w, v = self._torus_point(n), self._torus_point(m)
        results.append(self.check(
            f"bridge rho-a({n},{m})", BRIDGE_THRESHOLD, lambda: rho_bridge_residual_A(a, w, v),
        ))
        return results

    def _torus_point(self, size: int) -> List[complex]:
        return [complex(c) for c in np.exp(2j * math.pi * self.rng.uniform(0.0, 1.0, size))]


class ModularSuite(BaseSuite):
    """Modular invariance of the beta certificates and the G-product transformation of the beta term"""

    name = "modular"
    default_cases = 5

    def run_cases(self) -> List[CaseResult]:
        beta = beta_term_spec()
        results = []
        for case in range(self.cases):
            omega = sample_admissible_omega(self.rng)
            results.append(self.check(
                f"certificates[{case}]", 1e-7, lambda omega=omega: max(modular_sweep(beta, omega, self.rng)),
            ))
            u = sample_gamma_point(beta, omega, self.rng)
            results.append(self.check(
                f"G-transform[{case}]", 1e-6, lambda omega=omega, u=u: verify_modular_transform(beta, omega, u),
            ))
        return results
