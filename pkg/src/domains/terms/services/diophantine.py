"""
Exact integer checks of total ellipticity

For a pure term Δ = ∏_a Γ(x^{m_a})^{ε_a} every certificate h_i is elliptic in
every x_j and in q exactly when

    Σ_a ε_a m_i m_j m_k = 0   (i ≤ j ≤ k)
    Σ_a ε_a m_i m_j     = 0   (i ≤ j)
    Σ_a ε_a m_i         = 0
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Tuple

from core.errors import DomainViolationError
from domains.terms.models.term_spec import EllipticityReport, TermSpec

logger = logging.getLogger(__name__)


def _require_pure(t: TermSpec) -> None:
    if not t.is_pure:
        raise DomainViolationError(
            f"term '{t.name}' has factors with powers of pq; use the numeric ellipticity check"
        )


def check_total_ellipticity(t: TermSpec) -> EllipticityReport:
    """
    Evaluate every condition family with integer arithmetic

    Raises:
        DomainViolationError: when some factor carries sigma != 0
    """
    _require_pure(t)
    report = EllipticityReport(n=t.n, K=t.K)

    for indices in combinations_with_replacement(range(t.n), 3):
        i, j, k = indices
        total = sum(f.eps * f.m[i] * f.m[j] * f.m[k] for f in t.factors)
        if total:
            report.cubic_ok = False
            report.violations.append((indices, total))

    for indices in combinations_with_replacement(range(t.n), 2):
        i, j = indices
        total = sum(f.eps * f.m[i] * f.m[j] for f in t.factors)
        if total:
            report.quadratic_ok = False
            report.violations.append((indices, total))

    for i in range(t.n):
        total = sum(f.eps * f.m[i] for f in t.factors)
        if total:
            report.linear_ok = False
            report.violations.append(((i,), total))

    logger.debug(f"ellipticity check for '{t.name}': passed={report.passed} violations={len(report.violations)}")
    return report


@dataclass(frozen=True)
class MultiplierExponents:
    """
    Exponents of the multiplier (−1)^sign ∏ x_l^{x_l} q^q p^p picked up by a
    certificate under a p-shift of one variable or under q → pq
    """
    x: Tuple[Fraction, ...]
    sign: Fraction
    q: Fraction
    p: Fraction

    @property
    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.x) and self.sign % 2 == 0 and self.q == 0 and self.p == 0

    def to_dict(self) -> Dict[str, object]:
        return {
            "x": [str(e) for e in self.x],
            "sign": str(self.sign),
            "q": str(self.q),
            "p": str(self.p),
        }


def shift_exponents(t: TermSpec, i: int, j: int) -> MultiplierExponents:
    """
    Multiplier of h_i(…p x_j…)/h_i(x): each factor contributes
    [−x^m]^{−ε m_i m_j} q^{−ε m_j m_i(m_i−1)/2} p^{−ε m_i m_j(m_j−1)/2}
    """
    _require_pure(t)
    for index in (i, j):
        t.unit(index)
    x = [Fraction(0)] * t.n
    sign = q = p = Fraction(0)
    for f in t.factors:
        power = Fraction(-f.eps * f.m[i] * f.m[j])
        sign += power
        for l in range(t.n):
            x[l] += power * f.m[l]
        q += Fraction(-f.eps * f.m[j] * f.m[i] * (f.m[i] - 1), 2)
        p += Fraction(-f.eps * f.m[i] * f.m[j] * (f.m[j] - 1), 2)
    return MultiplierExponents(x=tuple(x), sign=sign, q=q, p=p)


def nome_shift_exponents(t: TermSpec, i: int) -> MultiplierExponents:
    """
    Multiplier of h_i(x;pq;p)/h_i(x;q;p): each factor contributes
    [−x^m]^{−ε m_i(m_i−1)/2} q^{−ε m_i(m_i−1)(2m_i−1)/6} p^{−ε m_i(m_i−1)(m_i−2)/6}
    """
    _require_pure(t)
    t.unit(i)
    x = [Fraction(0)] * t.n
    sign = q = p = Fraction(0)
    for f in t.factors:
        mi = f.m[i]
        power = Fraction(-f.eps * mi * (mi - 1), 2)
        sign += power
        for l in range(t.n):
            x[l] += power * f.m[l]
        q += Fraction(-f.eps * mi * (mi - 1) * (2 * mi - 1), 6)
        p += Fraction(-f.eps * mi * (mi - 1) * (mi - 2), 6)
    return MultiplierExponents(x=tuple(x), sign=sign, q=q, p=p)


def all_multipliers_trivial(t: TermSpec) -> bool:
    """Every p-shift and q → pq multiplier of every certificate equals 1"""
    for i in range(t.n):
        if not nome_shift_exponents(t, i).is_trivial:
            return False
        for j in range(t.n):
            if not shift_exponents(t, i, j).is_trivial:
                return False
    return True


def mutation_reports(t: TermSpec) -> List[Tuple[int, EllipticityReport]]:
    """Check every single-ε sign flip of the term"""
    return [(index, check_total_ellipticity(t.with_factor_flipped(index))) for index in range(t.K)]
