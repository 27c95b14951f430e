"""
Built-in elliptic hypergeometric terms

Variables are laid out block by block in the order the names are listed
(x, t1..t5 for the beta term; z, y, t for the BC ratio; z, y, s, t for the
A ratio).
"""

from typing import Callable, Dict, List, Sequence

from core.errors import DomainViolationError
from domains.terms.models.term_spec import Constraint, TermFactor, TermSpec


class _Layout:
    """Maps named variable blocks to positions of the exponent vector"""

    def __init__(self, blocks: Sequence[tuple]):
        self.names: List[str] = []
        self.offsets: Dict[str, int] = {}
        for prefix, size in blocks:
            self.offsets[prefix] = len(self.names)
            self.names.extend(f"{prefix}{i + 1}" for i in range(size))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, prefix: str, i: int) -> int:
        return self.offsets[prefix] + i

    def monomial(self, *powers) -> tuple:
        """monomial(("t", 0, 1), ("x", 0, -1)) → exponent vector of t1/x1"""
        vector = [0] * self.n
        for prefix, i, power in powers:
            vector[self.index(prefix, i)] += power
        return tuple(vector)


def beta_term_spec() -> TermSpec:
    """
    Kernel of the elliptic beta integral with t6 eliminated:

        ∏_{j=1}^5 Γ(t_j x^{±1}, P/t_j) / (Γ(x^{±2}, P x^{±1}) ∏_{i<j} Γ(t_i t_j)),  P = t1⋯t5
    """
    layout = _Layout([("x", 1), ("t", 5)])
    everything = [("t", i, 1) for i in range(5)]
    factors = []
    for j in range(5):
        for sign in (1, -1):
            factors.append(TermFactor(layout.monomial(("t", j, 1), ("x", 0, sign)), 1))
    for j in range(5):
        factors.append(TermFactor(layout.monomial(*everything, ("t", j, -1)), 1))
    for sign in (2, -2):
        factors.append(TermFactor(layout.monomial(("x", 0, sign)), -1))
    for sign in (1, -1):
        factors.append(TermFactor(layout.monomial(*everything, ("x", 0, sign)), -1))
    for i in range(5):
        for j in range(i + 1, 5):
            factors.append(TermFactor(layout.monomial(("t", i, 1), ("t", j, 1)), -1))
    names = tuple(["x"] + layout.names[1:])
    return TermSpec(n=layout.n, factors=tuple(factors), variables=names, name="beta")


def _check_ranks(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise DomainViolationError(f"ranks must be positive, got n={n}, m={m}")


def rho_BC_term_spec(n: int, m: int) -> TermSpec:
    """
    Ratio of the two BC-type kernels of the (n, m) ↔ (m, n) transformation,
    with ∏ t_r = (pq)^{m+1} solved for the last t
    """
    _check_ranks(n, m)
    count = 2 * n + 2 * m + 4
    layout = _Layout([("z", n), ("y", m), ("t", count)])
    factors = []

    for r in range(count):
        for s in range(r + 1, count):
            factors.append(TermFactor(layout.monomial(("t", r, 1), ("t", s, 1)), -1))
    for i in range(m):
        for j in range(i + 1, m):
            factors.append(TermFactor(layout.monomial(("y", i, 1), ("y", j, 1)), 1, sigma=-1))
            factors.append(TermFactor(layout.monomial(("y", i, -1), ("y", j, -1)), 1, sigma=1))
            factors.append(TermFactor(layout.monomial(("y", i, 1), ("y", j, -1)), 1))
            factors.append(TermFactor(layout.monomial(("y", i, -1), ("y", j, 1)), 1))
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    factors.append(TermFactor(layout.monomial(("z", i, si), ("z", j, sj)), -1))
    for j in range(m):
        factors.append(TermFactor(layout.monomial(("y", j, 2)), 1, sigma=-1))
        factors.append(TermFactor(layout.monomial(("y", j, -2)), 1, sigma=1))
    for j in range(n):
        for sign in (2, -2):
            factors.append(TermFactor(layout.monomial(("z", j, sign)), -1))
    for r in range(count):
        for j in range(n):
            for sign in (1, -1):
                factors.append(TermFactor(layout.monomial(("t", r, 1), ("z", j, sign)), 1))
        for j in range(m):
            factors.append(TermFactor(layout.monomial(("y", j, 1), ("t", r, -1)), -1))
            factors.append(TermFactor(layout.monomial(("t", r, -1), ("y", j, -1)), -1, sigma=1))

    balancing = Constraint(c=layout.monomial(*[("t", r, 1) for r in range(count)]), k=m + 1, solve=layout.index("t", count - 1))
    return TermSpec(
        n=layout.n, factors=tuple(factors), constraints=(balancing,), variables=tuple(layout.names), name=f"rho-bc({n},{m})"
    )


def rho_A_term_spec(n: int, m: int) -> TermSpec:
    """
    Ratio of the two A-type kernels of the (n, m) ↔ (m, n) transformation

    Constraints: ∏ z = 1 (solves z_{n+1}), ∏ y = ∏ s (solves y_{m+1}),
    ∏ s ∏ t = (pq)^{m+1} (solves t_{n+m+2}).
    """
    _check_ranks(n, m)
    count = n + m + 2
    layout = _Layout([("z", n + 1), ("y", m + 1), ("s", count), ("t", count)])
    factors = []

    for k in range(count):
        for r in range(count):
            factors.append(TermFactor(layout.monomial(("s", k, 1), ("t", r, 1)), -1))
    for r in range(count):
        for j in range(n + 1):
            factors.append(TermFactor(layout.monomial(("s", r, 1), ("z", j, 1)), 1))
            factors.append(TermFactor(layout.monomial(("t", r, 1), ("z", j, -1)), 1))
        for j in range(m + 1):
            factors.append(TermFactor(layout.monomial(("y", j, 1), ("s", r, -1)), -1))
            factors.append(TermFactor(layout.monomial(("t", r, -1), ("y", j, -1)), -1, sigma=1))
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            factors.append(TermFactor(layout.monomial(("y", i, 1), ("y", j, -1)), 1))
            factors.append(TermFactor(layout.monomial(("y", i, -1), ("y", j, 1)), 1))
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            factors.append(TermFactor(layout.monomial(("z", i, 1), ("z", j, -1)), -1))
            factors.append(TermFactor(layout.monomial(("z", i, -1), ("z", j, 1)), -1))

    constraints = (
        Constraint(c=layout.monomial(*[("z", j, 1) for j in range(n + 1)]), k=0, solve=layout.index("z", n)),
        Constraint(
            c=layout.monomial(*[("y", j, 1) for j in range(m + 1)], *[("s", r, -1) for r in range(count)]),
            k=0,
            solve=layout.index("y", m),
        ),
        Constraint(
            c=layout.monomial(*[("s", r, 1) for r in range(count)], *[("t", r, 1) for r in range(count)]),
            k=m + 1,
            solve=layout.index("t", count - 1),
        ),
    )
    return TermSpec(
        n=layout.n, factors=tuple(factors), constraints=constraints, variables=tuple(layout.names), name=f"rho-a({n},{m})"
    )


def single_gamma_term() -> TermSpec:
    """Γ(x): the simplest term that is not elliptic"""
    return TermSpec(n=1, factors=(TermFactor((1,), 1),), variables=("x",), name="single-gamma")


def cancelling_pair_term() -> TermSpec:
    """Γ(x) Γ(x)^{-1}"""
    return TermSpec(n=1, factors=(TermFactor((1,), 1), TermFactor((1,), -1)), variables=("x",), name="cancelling-pair")


BUILTIN_TERMS: Dict[str, Callable[..., TermSpec]] = {
    "beta": beta_term_spec,
    "rho-bc": rho_BC_term_spec,
    "rho-a": rho_A_term_spec,
    "single-gamma": single_gamma_term,
    "cancelling-pair": cancelling_pair_term,
}


def builtin_term(name: str, n: int = 1, m: int = 1) -> TermSpec:
    """Look up a built-in term; ranks are used by the rho ratios only"""
    if name not in BUILTIN_TERMS:
        raise DomainViolationError(f"Unknown built-in term: {name}. Available: {', '.join(BUILTIN_TERMS)}")
    if name.startswith("rho"):
        return BUILTIN_TERMS[name](n, m)
    return BUILTIN_TERMS[name]()
