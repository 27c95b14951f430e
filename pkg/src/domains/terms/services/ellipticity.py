"""
Numeric ellipticity and modular invariance of certificates

A certificate h_d is elliptic when it is unchanged under x_l → p^{e_l} x_l
and q → pq for every shift compatible with the balancing conditions. The
modular check compares h_i in the (ω2, ω3) picture with h_i in the
(ω3, ω2)-transformed picture.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.config import get_config
from core.errors import DomainViolationError, PoleProximityError
from core.params import BasePair, OmegaTriple, TruncationPolicy, default_policy, make_base_pair
from domains.gamma.services.elliptic_gamma import ell_gamma_array
from domains.gamma.services.modified_gamma import modified_G_product
from domains.terms.models.term_spec import IntVector, ShiftTransform, TermSpec, dot
from domains.terms.services.certificates import (
    balanced_direction,
    certificate_along,
    eval_certificate,
    sample_point,
)
from domains.terms.services.diophantine import check_total_ellipticity

logger = logging.getLogger(__name__)

TWO_PI_I = 2j * math.pi


def balanced_transform(t: TermSpec, p_shifts: Sequence[int], q_to_pq: bool = False) -> ShiftTransform:
    """
    Complete requested p-shifts with the compensating shift of each
    constraint's solved variable

    Raises:
        DomainViolationError: when a compensation is not integral
    """
    shifts = [int(e) for e in p_shifts]
    if len(shifts) != t.n:
        raise DomainViolationError(f"shift vector has length {len(shifts)}, expected {t.n}")
    flag = 1 if q_to_pq else 0
    for constraint in t.constraints:
        missing = constraint.k * flag - dot(constraint.c, tuple(shifts))
        coefficient = constraint.c[constraint.solve]
        if missing % coefficient:
            raise DomainViolationError(f"non-integral compensation {missing}/{coefficient}")
        shifts[constraint.solve] += missing // coefficient
    transform = ShiftTransform(p_shifts=tuple(shifts), q_to_pq=q_to_pq)
    if not transform.is_balanced(t):
        raise DomainViolationError("compensated transform still violates a balancing condition")
    return transform


def apply_transform(
    transform: ShiftTransform, x: Sequence[complex], base: BasePair
) -> Tuple[np.ndarray, BasePair]:
    """Point and nomes after x_l → p^{e_l} x_l (and q → pq)"""
    shifted = np.array([complex(xl) * complex(base.p) ** e for xl, e in zip(x, transform.p_shifts)])
    if transform.q_to_pq:
        return shifted, make_base_pair(base.p, base.pq)
    return shifted, base


def numeric_ellipticity_check(
    t: TermSpec,
    direction: IntVector,
    transform: ShiftTransform,
    base: BasePair,
    x: Sequence[complex],
    policy: Optional[TruncationPolicy] = None,
) -> float:
    """
    |h_d(transformed) / h_d(x) − 1|

    Raises:
        DomainViolationError: for an unbalanced transform or a direction off the balancing surface
        PoleProximityError: when the certificate has a pole at either point
    """
    policy = policy or default_policy()
    if not transform.is_balanced(t):
        raise DomainViolationError(f"transform {transform.p_shifts} (q->pq={transform.q_to_pq}) is not balanced")
    cert = certificate_along(t, direction)
    original = eval_certificate(cert, x, base, policy)
    moved_x, moved_base = apply_transform(transform, x, base)
    moved = eval_certificate(cert, moved_x, moved_base, policy)
    if original == 0:
        raise PoleProximityError("certificate vanishes at the sample point", location=complex(x[0]))
    return abs(moved / original - 1.0)


def admissible_directions(t: TermSpec) -> Dict[str, IntVector]:
    """One balanced unit direction per free variable, keyed by variable name"""
    return {t.variables[i]: balanced_direction(t, i) for i in t.free_variables}


def admissible_transforms(t: TermSpec) -> Dict[str, ShiftTransform]:
    """Single-variable p-shifts of every free variable plus q → pq, all balanced"""
    transforms = {}
    for i in t.free_variables:
        transforms[f"p*{t.variables[i]}"] = balanced_transform(t, t.unit(i))
    transforms["q->pq"] = balanced_transform(t, (0,) * t.n, q_to_pq=True)
    return transforms


@dataclass
class EllipticitySweep:
    """Worst residual of a full direction × transform sweep"""
    worst: float
    worst_case: str
    cases: int


def ellipticity_sweep(
    t: TermSpec,
    base: BasePair,
    rng: np.random.Generator,
    points: int = 1,
    policy: Optional[TruncationPolicy] = None,
) -> EllipticitySweep:
    """
    Evaluate every admissible certificate under every admissible transform at
    seeded sample points; points hitting a pole are resampled
    """
    policy = policy or default_policy()
    directions = admissible_directions(t)
    transforms = admissible_transforms(t)
    limit = get_config().verify.resample_limit

    worst, worst_case, cases = 0.0, "", 0
    for _ in range(points):
        for attempt in range(limit):
            x = sample_point(t, base, rng)
            try:
                for d_name, direction in directions.items():
                    for t_name, transform in transforms.items():
                        residual = numeric_ellipticity_check(t, direction, transform, base, x, policy)
                        cases += 1
                        if residual >= worst:
                            worst, worst_case = residual, f"h[{d_name}] under {t_name}"
                break
            except PoleProximityError as e:
                logger.debug(f"resampling ellipticity point: {e}")
        else:
            raise PoleProximityError(f"no pole-free sample point after {limit} attempts")
    return EllipticitySweep(worst=worst, worst_case=worst_case, cases=cases)


def _require_modular_ready(t: TermSpec, require_elliptic: bool = True) -> None:
    if t.constraints:
        raise DomainViolationError(f"modular checks need a term without balancing constraints, '{t.name}' has some")
    if not require_elliptic:
        return
    report = check_total_ellipticity(t)
    if not report.passed:
        raise DomainViolationError(f"term '{t.name}' is not totally elliptic", bound=len(report.violations))


def sample_gamma_point(t: TermSpec, omega: OmegaTriple, rng: np.random.Generator) -> np.ndarray:
    """γ_l = a ω1 + b ω2 + c ω3 with a, c scaled so every monomial stays inside one period cell"""
    spread = max([sum(abs(v) for v in f.m) for f in t.factors] + [1])
    a = rng.uniform(0.0, 1.0 / spread, t.n)
    b = rng.uniform(0.0, 1.0, t.n)
    c = rng.uniform(0.0, 1.0 / spread, t.n)
    return a * omega.omega1 + b * omega.omega2 + c * omega.omega3


def modular_invariance_check(
    t: TermSpec,
    i: int,
    omega: OmegaTriple,
    gamma: Sequence[complex],
    policy: Optional[TruncationPolicy] = None,
    require_elliptic: bool = True,
) -> float:
    """
    |h_i(e^{−2πiγ/ω3}; r̃; p̃) / h_i(e^{2πiγ/ω2}; q; p) − 1|

    Raises:
        DomainViolationError: for terms with constraints, or failing the Diophantine
            check unless require_elliptic is False
    """
    policy = policy or default_policy()
    _require_modular_ready(t, require_elliptic)
    omega.require_below_one("p", "p_tilde")
    gamma = np.asarray(gamma, dtype=np.complex128)
    cert = certificate_along(t, t.unit(i))

    x = np.exp(TWO_PI_I * gamma / omega.omega2)
    x_tilde = np.exp(-TWO_PI_I * gamma / omega.omega3)
    direct = eval_certificate(cert, x, make_base_pair(omega.p, omega.q), policy)
    transformed = eval_certificate(
        cert, x_tilde, make_base_pair(omega.p_tilde, omega.r_tilde), policy
    )
    return abs(transformed / direct - 1.0)


def modular_transform_factor(t: TermSpec, omega: OmegaTriple) -> complex:
    """
    Exponent (πi/12)(Σω_k)(Σω_k^{−1}) Σ_a ε_a of the scalar relating
    ∏ G(Σ u_l m_l;ω)^ε to Δ(x̃; r̃, p̃)

    Raises:
        DomainViolationError: on terms that are not totally elliptic
    """
    report = check_total_ellipticity(t)
    if not report.passed:
        raise DomainViolationError(f"term '{t.name}' is not totally elliptic", bound=len(report.violations))
    omegas = omega.omegas
    return 1j * math.pi / 12 * sum(omegas) * sum(1.0 / w for w in omegas) * t.total_multiplicity


def verify_modular_transform(
    t: TermSpec,
    omega: OmegaTriple,
    u: Sequence[complex],
    policy: Optional[TruncationPolicy] = None,
) -> float:
    """
    Relative residual of

        ∏_a G(Σ_l u_l m_l; ω)^ε = e^{exponent} ∏_a Γ_{r̃,p̃}(x̃^m)^ε,  x̃_l = e^{−2πiu_l/ω3}

    with G evaluated through its product representation.
    """
    policy = policy or default_policy()
    _require_modular_ready(t)
    omega.require_below_one("r_tilde", "p_tilde")
    u = np.asarray(u, dtype=np.complex128)

    lhs = 1.0 + 0.0j
    arguments = []
    for f in t.factors:
        combined = complex(np.dot(np.array(f.m, dtype=float), u))
        lhs *= modified_G_product(combined, omega, policy).value ** f.eps
        arguments.append(cmath.exp(-TWO_PI_I * combined / omega.omega3))

    values = ell_gamma_array(np.array(arguments), make_base_pair(omega.r_tilde, omega.p_tilde), policy)
    rhs = cmath.exp(modular_transform_factor(t, omega)) * complex(np.prod(values ** np.array([f.eps for f in t.factors])))
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs))


def modular_sweep(
    t: TermSpec, omega: OmegaTriple, rng: np.random.Generator, policy: Optional[TruncationPolicy] = None
) -> List[float]:
    """Modular residual of every single-variable certificate at one sampled point"""
    gamma = sample_gamma_point(t, omega, rng)
    return [modular_invariance_check(t, i, omega, gamma, policy) for i in range(t.n)]
