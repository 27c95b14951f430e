"""
Parameter sets of the elliptic hypergeometric integrals

Constrained parameters are always derived from the free ones (the last t of
each set), so the balancing conditions hold by construction.
"""

import cmath
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from core.errors import DomainViolationError
from core.params import BasePair

# Desk-scale rank limits
MAX_RANK = 2
MAX_TOTAL_RANK = 3

_BALANCE_TOL = 1e-10


def _as_params(values: Sequence[complex], count: int, what: str) -> Tuple[complex, ...]:
    params = tuple(complex(v) for v in values)
    if len(params) != count:
        raise DomainViolationError(f"{what} needs {count} parameters, got {len(params)}")
    if any(v == 0 for v in params):
        raise DomainViolationError(f"{what} parameters must be nonzero", location=0j)
    return params


def _require_inside(params: Sequence[complex], what: str) -> None:
    for value in params:
        if not abs(value) < 1:
            raise DomainViolationError(f"{what} parameter outside the unit disc", location=value, bound=1.0)


def _require_balanced(product: complex, target: complex, what: str) -> None:
    if abs(product - target) > _BALANCE_TOL * abs(target):
        raise DomainViolationError(f"{what} balancing condition violated", location=product, bound=abs(target))


def check_ranks(n: int, m: int) -> None:
    """Raise DomainViolation outside 0 <= n, m <= 2 with n + m <= 3"""
    if n < 0 or m < 0:
        raise DomainViolationError(f"ranks must be nonnegative, got n={n}, m={m}")
    if n > MAX_RANK or m > MAX_RANK or n + m > MAX_TOTAL_RANK:
        raise DomainViolationError(
            f"rank (n={n}, m={m}) exceeds the supported range n, m <= {MAX_RANK}, n + m <= {MAX_TOTAL_RANK}",
            bound=MAX_TOTAL_RANK,
        )


@dataclass(frozen=True)
class BetaParams:
    """t1..t6 with t1⋯t6 = pq"""
    t: Tuple[complex, ...]
    base: BasePair

    def __post_init__(self):
        object.__setattr__(self, "t", _as_params(self.t, 6, "elliptic beta"))
        if self.base.inverted_q:
            raise DomainViolationError("integrals need |q| < 1", location=self.base.q, bound=1.0)
        _require_balanced(complex(np.prod(self.t)), self.base.pq, "elliptic beta")
        _require_inside(self.t, "elliptic beta")

    @classmethod
    def from_free(cls, t_free: Sequence[complex], base: BasePair) -> "BetaParams":
        free = _as_params(t_free, 5, "elliptic beta (free)")
        return cls(t=free + (base.pq / complex(np.prod(free)),), base=base)

    @property
    def free(self) -> Tuple[complex, ...]:
        return self.t[:5]


@dataclass(frozen=True)
class VParams:
    """t1..t8 with t1⋯t8 = (pq)^2"""
    t: Tuple[complex, ...]
    base: BasePair

    def __post_init__(self):
        object.__setattr__(self, "t", _as_params(self.t, 8, "V-function"))
        if self.base.inverted_q:
            raise DomainViolationError("integrals need |q| < 1", location=self.base.q, bound=1.0)
        _require_balanced(complex(np.prod(self.t)), self.base.pq ** 2, "V-function")
        _require_inside(self.t, "V-function")

    @classmethod
    def from_free(cls, t_free: Sequence[complex], base: BasePair) -> "VParams":
        free = _as_params(t_free, 7, "V-function (free)")
        return cls(t=free + (base.pq ** 2 / complex(np.prod(free)),), base=base)


@dataclass(frozen=True)
class BCParams:
    """t1..t_{2n+2m+4} with ∏ t = (pq)^{m+1}"""
    n: int
    m: int
    t: Tuple[complex, ...]
    base: BasePair

    def __post_init__(self):
        check_ranks(self.n, self.m)
        object.__setattr__(self, "t", _as_params(self.t, self.count, f"BC({self.n},{self.m})"))
        if self.base.inverted_q:
            raise DomainViolationError("integrals need |q| < 1", location=self.base.q, bound=1.0)
        _require_balanced(complex(np.prod(self.t)), self.base.pq ** (self.m + 1), f"BC({self.n},{self.m})")
        if self.n > 0:
            _require_inside(self.t, f"BC({self.n},{self.m})")

    @property
    def count(self) -> int:
        return 2 * self.n + 2 * self.m + 4

    @classmethod
    def from_free(cls, n: int, m: int, t_free: Sequence[complex], base: BasePair) -> "BCParams":
        free = _as_params(t_free, 2 * n + 2 * m + 3, f"BC({n},{m}) (free)")
        return cls(n=n, m=m, t=free + (base.pq ** (m + 1) / complex(np.prod(free)),), base=base)

    def transformed(self) -> "BCParams":
        """Parameters √(pq)/t_r of the (m, n) side, principal square root"""
        root = cmath.sqrt(self.base.pq)
        return BCParams(n=self.m, m=self.n, t=tuple(root / v for v in self.t), base=self.base)

    def replaced(self, index: int, value: complex, m: int) -> "BCParams":
        """Copy with one parameter replaced; used by recurrences whose input is balanced differently"""
        t = list(self.t)
        t[index] = value
        return BCParams(n=self.n, m=m, t=tuple(t), base=self.base)


@dataclass(frozen=True)
class AParams:
    """s, t (n+m+2 each) with S T = (pq)^{m+1}"""
    n: int
    m: int
    s: Tuple[complex, ...]
    t: Tuple[complex, ...]
    base: BasePair

    def __post_init__(self):
        check_ranks(self.n, self.m)
        label = f"A({self.n},{self.m})"
        object.__setattr__(self, "s", _as_params(self.s, self.count, label))
        object.__setattr__(self, "t", _as_params(self.t, self.count, label))
        if self.base.inverted_q:
            raise DomainViolationError("integrals need |q| < 1", location=self.base.q, bound=1.0)
        _require_balanced(self.S * self.T, self.base.pq ** (self.m + 1), label)
        if self.n > 0:
            _require_inside(self.s + self.t, label)

    @property
    def count(self) -> int:
        return self.n + self.m + 2

    @property
    def S(self) -> complex:
        return complex(np.prod(self.s))

    @property
    def T(self) -> complex:
        return complex(np.prod(self.t))

    @classmethod
    def from_free(cls, n: int, m: int, s: Sequence[complex], t_free: Sequence[complex], base: BasePair) -> "AParams":
        count = n + m + 2
        s = _as_params(s, count, f"A({n},{m}) s")
        free = _as_params(t_free, count - 1, f"A({n},{m}) t (free)")
        last = base.pq ** (m + 1) / (complex(np.prod(s)) * complex(np.prod(free)))
        return cls(n=n, m=m, s=s, t=free + (last,), base=base)

    def roots(self) -> Tuple[complex, complex]:
        """
        (S^{1/(m+1)}, T^{1/(m+1)}) with the principal S root and the T root
        fixed by their product pq
        """
        sigma = cmath.exp(cmath.log(self.S) / (self.m + 1))
        return sigma, self.base.pq / sigma

    def transformed(self) -> "AParams":
        """Parameters S^{1/(m+1)}/s_l and T^{1/(m+1)}/t_l of the (m, n) side"""
        sigma, tau = self.roots()
        return AParams(
            n=self.m, m=self.n,
            s=tuple(sigma / v for v in self.s),
            t=tuple(tau / v for v in self.t),
            base=self.base,
        )

    def rotated(self, c: complex) -> "AParams":
        """s → c s, t → t/c"""
        return AParams(
            n=self.n, m=self.m, s=tuple(c * v for v in self.s), t=tuple(v / c for v in self.t), base=self.base
        )
