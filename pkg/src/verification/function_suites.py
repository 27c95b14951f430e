"""
Verification suites for the theta, gamma and modified gamma function identities
"""

import cmath
import logging
import math
from typing import List

import numpy as np

from core.params import BasePair
from domains.gamma.services.elliptic_gamma import (
    duplication_residual,
    ell_gamma,
    ell_gamma_residue_limit,
)
from domains.gamma.services.hyperbolic_gamma import (
    hyperbolic_gamma_integral,
    hyperbolic_gamma_product,
    hyperbolic_shift_residuals,
)
from domains.gamma.services.modified_gamma import (
    REPRESENTATIONS,
    ell_gamma_additive_residuals,
    modified_G_equation_residuals,
    sample_admissible_omega,
    sl3z_residual,
)
from domains.gamma.services.pochhammer import qpoch_inf
from domains.gamma.services.q_gamma import thomae_jackson_shift_residuals
from domains.integrals.services.sampling import sample_base
from domains.theta.services.identities import (
    addition_law_residual,
    quasiperiodicity_residuals,
    relative_gap,
    theta_modular_residual,
    triple_product_check,
)
from domains.theta.services.theta_service import theta, theta_pochhammer
from verification.base_suite import BaseSuite, CaseResult

logger = logging.getLogger(__name__)


def _annulus_point(rng: np.random.Generator, low: float, high: float) -> complex:
    return complex(rng.uniform(low, high) * cmath.exp(1j * rng.uniform(0.0, 2 * math.pi)))


class ThetaIdentitySuite(BaseSuite):
    """Triple product, addition law, inversion, quasiperiodicity and the modular relation"""

    name = "theta-identities"
    default_cases = 100

    def run_cases(self) -> List[CaseResult]:
        results = []
        for case in range(self.cases):
            p = complex(self.rng.uniform(0.0, 0.3) * cmath.exp(1j * self.rng.uniform(0.0, 2 * math.pi)))
            x = _annulus_point(self.rng, 0.5, 1.5)
            results.append(self.check(
                f"triple-product[{case}]", 1e-11, lambda x=x, p=p: triple_product_check(x, p, 30),
            ))

            y, w, z = (_annulus_point(self.rng, 0.5, 2.0) for _ in range(3))
            results.append(self.check(
                f"addition-law[{case}]", 1e-10, lambda x=x, y=y, w=w, z=z: addition_law_residual(x, y, w, z, 0.15),
            ))

            results.append(self.check(
                f"inversion[{case}]", 1e-11,
                lambda x=x, p=p: relative_gap(theta(1.0 / x, p), -theta(x, p) / x),
            ))

            q = _annulus_point(self.rng, 0.2, 0.8)
            m = int(self.rng.integers(-2, 3))
            k = int(self.rng.integers(0, 4))
            results.append(self.check(
                f"quasiperiodicity[{case}]", 1e-10,
                lambda x=x, q=q, p=p, m=m, k=k: max(quasiperiodicity_residuals(x, q, p, m, k)),
                m=m, k=k,
            ))

            n = int(self.rng.integers(-5, 6))
            results.append(self.check(
                f"factorial-step[{case}]", 1e-11,
                lambda x=x, q=q, p=p, n=n: relative_gap(
                    theta_pochhammer(x, q, p, n + 1), theta_pochhammer(x, q, p, n) * theta(x * q ** n, p)
                ),
                n=n,
            ))

            tau = complex(self.rng.uniform(-0.5, 0.5), self.rng.uniform(0.4, 1.5))
            u = complex(self.rng.uniform(0.0, 1.0), self.rng.uniform(-0.2, 0.2))
            results.append(self.check(
                f"theta-modular[{case}]", 1e-10, lambda u=u, tau=tau: theta_modular_residual(u, tau, 1.0),
            ))
        return results


class GammaIdentitySuite(BaseSuite):
    """Reflection, shift equations, factorial bridge, duplication, residue limit and Thomae–Jackson shifts"""

    name = "gamma-identities"
    default_cases = 100

    def _reflection(self, z: complex, base: BasePair) -> float:
        return abs(ell_gamma(z, base).value * ell_gamma(base.pq / z, base).value - 1.0)

    def _shifts(self, z: complex, base: BasePair) -> float:
        value = ell_gamma(z, base).value
        q_shift = relative_gap(ell_gamma(base.q * z, base).value, theta(z, base.p) * value)
        p_shift = relative_gap(ell_gamma(base.p * z, base).value, theta(z, base.q) * value)
        return max(q_shift, p_shift)

    def _bridge(self, z: complex, n: int, base: BasePair) -> float:
        ratio = ell_gamma(z * base.q ** n, base).value / ell_gamma(z, base).value
        return relative_gap(theta_pochhammer(z, base.q, base.p, n), ratio)

    def _residue(self, base: BasePair) -> float:
        expected = 1.0 / (qpoch_inf(base.p, base.p).value * qpoch_inf(base.q, base.q).value)
        return relative_gap(ell_gamma_residue_limit(base).value, expected)

    def run_cases(self) -> List[CaseResult]:
        results = []
        for case in range(self.cases):
            base = sample_base(self.rng)
            z = _annulus_point(self.rng, 0.3, 3.0)
            results.append(self.check(f"reflection[{case}]", 1e-11, lambda z=z, base=base: self._reflection(z, base)))
            results.append(self.check(f"shift-equations[{case}]", 1e-11, lambda z=z, base=base: self._shifts(z, base)))

            n = int(self.rng.integers(-4, 5))
            results.append(self.check(
                f"factorial-bridge[{case}]", 1e-10, lambda z=z, n=n, base=base: self._bridge(z, n, base), n=n,
            ))

            w = _annulus_point(self.rng, 0.4, 0.9)
            results.append(self.check(
                f"duplication[{case}]", 1e-10, lambda w=w, base=base: duplication_residual(w, base),
            ))
            results.append(self.check(f"residue-limit[{case}]", 1e-11, lambda base=base: self._residue(base)))

            q = float(self.rng.uniform(0.1, 0.7))
            u = complex(self.rng.uniform(0.2, 2.0), self.rng.uniform(-0.5, 0.5))
            results.append(self.check(
                f"thomae-jackson[{case}]", 1e-10, lambda u=u, q=q: max(thomae_jackson_shift_residuals(u, q)),
            ))
        return results


class SL3ZSuite(BaseSuite):
    """
    Agreement of the two G representations, the defining equations of G and
    the additive shift equations of Γ_{p,q}
    """

    name = "sl3z"
    default_cases = 20
    threshold = 1e-8

    # ω triples on which the defining equations are also checked
    equation_cases = 5

    def run_cases(self) -> List[CaseResult]:
        results = []
        for case in range(self.cases):
            omega = sample_admissible_omega(self.rng)
            a, b, c = self.rng.uniform(0.0, 1.0, 3)
            u = a * omega.omega1 + b * omega.omega2 + c * omega.omega3
            results.append(self.check(
                f"sl3z[{case}]", self.threshold, lambda u=u, omega=omega: sl3z_residual(u, omega),
            ))
            if case >= self.equation_cases:
                continue
            for representation in REPRESENTATIONS:
                results.append(self.check(
                    f"G-equations[{case}] {representation}", self.threshold,
                    lambda u=u, omega=omega, representation=representation: max(
                        modified_G_equation_residuals(u, omega, representation)
                    ),
                ))
            results.append(self.check(
                f"gamma-additive[{case}]", 1e-10, lambda u=u, omega=omega: max(ell_gamma_additive_residuals(u, omega)),
            ))
        return results


class HyperbolicCrossSuite(BaseSuite):
    """Product against contour-integral representation of the hyperbolic gamma"""

    name = "hyp-cross"
    default_cases = 10
    threshold = 1e-6

    omega1 = 1.0 + 0.0j
    omega2 = 1.0 - 0.6j

    def _cross(self, u: complex) -> float:
        product = hyperbolic_gamma_product(u, self.omega1, self.omega2).value
        integral = hyperbolic_gamma_integral(u, self.omega1, self.omega2).value
        return relative_gap(product, integral)

    def _symmetry(self, u: complex) -> float:
        return relative_gap(
            hyperbolic_gamma_product(u, self.omega1, self.omega2).value,
            hyperbolic_gamma_product(u, self.omega2, self.omega1).value,
        )

    def run_cases(self) -> List[CaseResult]:
        results = []
        for case in range(self.cases):
            u = complex(self.rng.uniform(0.2, 0.9), self.rng.uniform(-0.3, 0.3))
            results.append(self.check(f"cross[{case}]", self.threshold, lambda u=u: self._cross(u)))
            results.append(self.check(f"symmetry[{case}]", 1e-9, lambda u=u: self._symmetry(u)))
            for representation in ("product", "integral"):
                results.append(self.check(
                    f"shifts[{case}] {representation}", self.threshold,
                    lambda u=u, representation=representation: max(
                        hyperbolic_shift_residuals(u, self.omega1, self.omega2, representation)
                    ),
                ))
        return results
