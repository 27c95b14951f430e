"""
Seeded samplers of admissible parameter sets

Moduli of the free parameters are drawn around the geometric mean fixed by
the balancing target, phases uniformly; the last parameter is solved from the
balancing condition and the draw is repeated until the acceptance predicate
holds.
"""

import math
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import DomainViolationError
from core.params import BasePair, make_base_pair
from domains.integrals.models.params import AParams, BCParams, BetaParams, check_ranks

# Largest parameter modulus handed to the quadrature
MODULUS_CAP = 0.85

# Spread of the free moduli around the geometric mean
_SPREAD = 0.8

_MAX_DRAWS = 2000

Window = Tuple[float, float]


def sample_base(rng: np.random.Generator, low: float = 0.05, high: float = 0.3, real: bool = False) -> BasePair:
    """Nomes with moduli in [low, high]; random phases unless real"""
    moduli = rng.uniform(low, high, 2)
    phases = np.zeros(2) if real else rng.uniform(0.0, 2 * math.pi, 2)
    p, q = moduli * np.exp(1j * phases)
    return make_base_pair(complex(p), complex(q))


def geometric_windows(target: complex, count: int, cap: float = MODULUS_CAP) -> List[Window]:
    """count − 1 modulus windows around |target|^{1/count}"""
    g = abs(target) ** (1.0 / count)
    return [(_SPREAD * g, min(g / _SPREAD, cap))] * (count - 1)


def balanced_draw(
    target: complex,
    windows: Sequence[Window],
    rng: np.random.Generator,
    accept: Optional[Callable[[np.ndarray], bool]] = None,
) -> np.ndarray:
    """
    Parameters with moduli from the windows and a last entry target/∏, the
    first draw passing accept (default: every modulus at most MODULUS_CAP)

    Raises:
        DomainViolationError: when no draw is accepted
    """
    accept = accept or (lambda values: bool(np.all(np.abs(values) <= MODULUS_CAP)))
    low = np.array([w[0] for w in windows])
    high = np.array([w[1] for w in windows])
    for _ in range(_MAX_DRAWS):
        free = rng.uniform(low, high) * np.exp(1j * rng.uniform(0.0, 2 * math.pi, len(windows)))
        values = np.append(free, complex(target) / complex(np.prod(free)))
        if accept(values):
            return values
    raise DomainViolationError(f"no admissible parameter set after {_MAX_DRAWS} draws", location=complex(target))


def sample_beta_params(base: BasePair, rng: np.random.Generator) -> BetaParams:
    """t_1..t_5 free, t_6 = pq/∏ within the modulus cap"""
    values = balanced_draw(base.pq, geometric_windows(base.pq, 6), rng)
    return BetaParams.from_free(values[:5], base)


def sample_v_reduction(base: BasePair, rng: np.random.Generator) -> Tuple[np.ndarray, complex]:
    """Free t_1..t_5 and t_7 for the t_7 t_8 = pq reduction"""
    free = sample_beta_params(base, rng).free
    pq = abs(base.pq)
    low = max(pq / (_SPREAD * MODULUS_CAP), math.sqrt(pq) * _SPREAD)
    modulus = rng.uniform(low, max(low, _SPREAD * MODULUS_CAP))
    t7 = modulus * np.exp(1j * rng.uniform(0.0, 2 * math.pi))
    return np.array(free), complex(t7)


def _within(values: np.ndarray, cap: float) -> bool:
    return bool(np.all(np.abs(values) <= cap))


def sample_bc_transformation(n: int, m: int, base: BasePair, rng: np.random.Generator) -> BCParams:
    """BC parameters whose integral sides all stay within the modulus cap"""
    check_ranks(n, m)
    count = 2 * n + 2 * m + 4
    target = base.pq ** (m + 1)
    root = math.sqrt(abs(base.pq))

    def accept(values: np.ndarray) -> bool:
        if n > 0 and not _within(values, MODULUS_CAP):
            return False
        return m == 0 or _within(root / np.abs(values), MODULUS_CAP)

    values = balanced_draw(target, geometric_windows(target, count), rng, accept)
    return BCParams(n=n, m=m, t=tuple(values), base=base)


def sample_a_transformation(n: int, m: int, base: BasePair, rng: np.random.Generator) -> AParams:
    """A parameters (s first, then t) whose integral sides all stay within the modulus cap"""
    check_ranks(n, m)
    count = n + m + 2
    target = base.pq ** (m + 1)

    def accept(values: np.ndarray) -> bool:
        if n > 0 and not _within(values, MODULUS_CAP):
            return False
        if m == 0:
            return True
        params = AParams(n=n, m=m, s=tuple(values[:count]), t=tuple(values[count:]), base=base)
        sigma, tau = params.roots()
        return _within(sigma / np.array(params.s), MODULUS_CAP) and _within(tau / np.array(params.t), MODULUS_CAP)

    values = balanced_draw(target, geometric_windows(target, 2 * count), rng, accept)
    return AParams(n=n, m=m, s=tuple(values[:count]), t=tuple(values[count:]), base=base)


def sample_recurrence_I(
    n: int, m: int, base: BasePair, rng: np.random.Generator
) -> Tuple[np.ndarray, List[int]]:
    """Parameters with ∏ t = (pq)^m p and a random index set of size n+2"""
    check_ranks(n, m)
    count = 2 * n + 2 * m + 4
    target = base.pq ** m * base.p
    values = balanced_draw(target, geometric_windows(target, count), rng)
    indices = sorted(int(i) for i in rng.choice(count, size=n + 2, replace=False))
    return values, indices


def sample_recurrence_II(
    n: int, m: int, base: BasePair, rng: np.random.Generator
) -> Tuple[np.ndarray, List[int]]:
    """
    Parameters with ∏ t = (pq)^{m+1} q and a random index set K of size m+2
    whose members satisfy |t_k| < |q| so the shifted t_k/q stay inside the cap
    """
    check_ranks(n, m)
    count = 2 * n + 2 * m + 4
    target = base.pq ** (m + 1) * base.q
    indices = sorted(int(i) for i in rng.choice(count - 1, size=m + 2, replace=False))
    aq = abs(base.q)
    inner: Window = (0.5 * aq, 0.8 * aq)
    rest = (abs(target) / (0.65 * aq) ** (m + 2)) ** (1.0 / (count - m - 2))
    outer: Window = (_SPREAD * rest, min(rest / _SPREAD, MODULUS_CAP))
    windows = [inner if i in indices else outer for i in range(count - 1)]

    def accept(values: np.ndarray) -> bool:
        shifted = values.copy()
        shifted[indices] = shifted[indices] / base.q
        return _within(values, MODULUS_CAP) and _within(shifted, MODULUS_CAP)

    return balanced_draw(target, windows, rng, accept), indices


def sample_kernel_point(rng: np.random.Generator, low: float = 0.3, high: float = 0.8) -> Tuple[complex, np.ndarray]:
    """x on the unit circle and five parameters with moduli in [low, high]"""
    x = complex(np.exp(1j * rng.uniform(0.0, 2 * math.pi)))
    t = rng.uniform(low, high, 5) * np.exp(1j * rng.uniform(0.0, 2 * math.pi, 5))
    return x, t
