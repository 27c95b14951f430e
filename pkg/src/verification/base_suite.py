"""
Base Verification Suite Interface

Defines the interface every named verification suite implements. A suite
draws seeded admissible inputs, runs one family of identity checks and
reports one CaseResult per check.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional
import logging

import numpy as np

from core.config import get_config
from core.errors import EvalError

logger = logging.getLogger(__name__)


@dataclass
class CaseResult:
    """Standardized outcome of one identity check"""
    name: str
    residual: Optional[float]
    threshold: float
    passed: bool
    detail: Dict[str, Any] = None
    error: Optional[str] = None

    def __post_init__(self):
        if self.detail is None:
            self.detail = {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for reports"""
        result = {
            'name': self.name,
            'residual': self.residual,
            'threshold': self.threshold,
            'pass': self.passed,
        }
        if self.detail:
            result['detail'] = self.detail
        if self.error:
            result['error'] = self.error
        return result


@dataclass
class SuiteConfig:
    """Base configuration for suites"""
    tol: Optional[float] = None
    seed: int = field(default_factory=lambda: get_config().verify.seed)
    n: int = 1
    m: int = 1
    cases: Optional[int] = None

    def __post_init__(self):
        # Validate configuration
        if self.tol is not None and self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.n < 0 or self.m < 0:
            raise ValueError("ranks cannot be negative")
        if self.cases is not None and self.cases < 1:
            raise ValueError("cases must be at least 1")


class BaseSuite(ABC):
    """
    Abstract base class for all verification suites

    Subclasses set name and default_cases and implement run_cases. Evaluation
    errors inside a case are recorded as a failed case; configuration errors
    (ranks, unsupported arguments) surface from the constructor.
    """

    name: str = "suite"
    default_cases: int = 1

    def __init__(self, config: SuiteConfig = None):
        self.config = config or SuiteConfig()
        self.rng = np.random.default_rng(self.config.seed)
        self.validate()

    @property
    def cases(self) -> int:
        return self.config.cases or self.default_cases

    def validate(self) -> None:
        """Reject configurations the suite cannot run; raises EvalError subclasses"""

    @abstractmethod
    def run_cases(self) -> List[CaseResult]:
        """Run every check of the suite"""

    def run(self) -> List[CaseResult]:
        logger.info(f"running suite {self.name} (seed={self.config.seed}, cases={self.cases})")
        results = self.run_cases()
        failed = sum(1 for r in results if not r.passed)
        logger.info(f"suite {self.name}: {len(results) - failed}/{len(results)} passed")
        return results

    def check(self, name: str, threshold: float, compute: Callable[[], Any], **detail) -> CaseResult:
        """
        Run one check; compute returns a residual or an object with a residual
        attribute and an optional to_dict
        """
        try:
            outcome = compute()
        except EvalError as e:
            logger.warning(f"{self.name}/{name} failed: {e}")
            return CaseResult(name=name, residual=None, threshold=threshold, passed=False, detail=detail,
                              error=f"{e.kind.value}: {e.detail}")
        if hasattr(outcome, "residual"):
            residual = float(outcome.residual)
            if hasattr(outcome, "to_dict"):
                detail = {**detail, **outcome.to_dict()}
                detail.pop("residual", None)
        else:
            residual = float(outcome)
        return CaseResult(name=name, residual=residual, threshold=threshold, passed=residual < threshold, detail=detail)

    def get_stats(self) -> Dict[str, Any]:
        """Suite settings echoed into reports"""
        return {
            'suite': self.name,
            'seed': self.config.seed,
            'cases': self.cases,
            'n': self.config.n,
            'm': self.config.m,
            'tol': self.config.tol,
        }
