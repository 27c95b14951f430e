"""
Verification Suites Package

Every suite draws seeded admissible inputs, runs one family of identity checks
and reports a CaseResult per check.

Available Suites:
- beta, v-reduction, trafo-bc, trafo-a, rec-1, rec-2, kernel-qdiff: integral identities
- sl3z, gamma-identities, theta-identities, hyp-cross: function identities
- ellipticity, modular: elliptic hypergeometric terms

All suites implement the BaseSuite interface.
"""

from .base_suite import BaseSuite, CaseResult, SuiteConfig
from .function_suites import GammaIdentitySuite, HyperbolicCrossSuite, SL3ZSuite, ThetaIdentitySuite
from .integral_suites import (
    BetaSuite,
    KernelQDiffSuite,
    RecurrenceIISuite,
    RecurrenceISuite,
    TrafoASuite,
    TrafoBCSuite,
    VReductionSuite,
)
from .term_suites import EllipticitySuite, ModularSuite

__all__ = [
    # Base classes
    'BaseSuite',
    'CaseResult',
    'SuiteConfig',

    # Suite implementations
    'BetaSuite',
    'VReductionSuite',
    'TrafoBCSuite',
    'TrafoASuite',
    'RecurrenceISuite',
    'RecurrenceIISuite',
    'KernelQDiffSuite',
    'SL3ZSuite',
    'GammaIdentitySuite',
    'ThetaIdentitySuite',
    'HyperbolicCrossSuite',
    'EllipticitySuite',
    'ModularSuite',
]

# Suite registry for dynamic loading
SUITE_REGISTRY = {
    'beta': BetaSuite,
    'v-reduction': VReductionSuite,
    'trafo-bc': TrafoBCSuite,
    'trafo-a': TrafoASuite,
    'rec-1': RecurrenceISuite,
    'rec-2': RecurrenceIISuite,
    'kernel-qdiff': KernelQDiffSuite,
    'sl3z': SL3ZSuite,
    'gamma-identities': GammaIdentitySuite,
    'theta-identities': ThetaIdentitySuite,
    'hyp-cross': HyperbolicCrossSuite,
    'ellipticity': EllipticitySuite,
    'modular': ModularSuite,
}


def get_suite_class(suite_name: str):
    """
    Get suite class by name

    Raises:
        ValueError: If suite name is not recognized
    """
    suite_name = suite_name.lower()

    if suite_name not in SUITE_REGISTRY:
        available = ', '.join(SUITE_REGISTRY.keys())
        raise ValueError(f"Unknown suite '{suite_name}'. Available suites: {available}")

    return SUITE_REGISTRY[suite_name]


def create_suite(suite_name: str, config: SuiteConfig = None):
    """Create suite instance by name"""
    suite_class = get_suite_class(suite_name)
    return suite_class(config=config)
