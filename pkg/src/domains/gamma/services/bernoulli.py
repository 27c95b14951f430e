"""
Multiple Bernoulli polynomials B_{2,2} and B_{3,3}
"""

from core.errors import DomainViolationError


def bernoulli_B22(u: complex, mu1: complex, mu2: complex) -> complex:
    """B_{2,2}(u|μ1,μ2) = (u² − (μ1+μ2)u + (μ1²+μ2²)/6 + μ1μ2/2)/(μ1μ2)"""
    u, mu1, mu2 = complex(u), complex(mu1), complex(mu2)
    if mu1 * mu2 == 0:
        raise DomainViolationError("B22 needs nonzero periods", location=mu1 * mu2, bound=0.0)
    return (u * u - (mu1 + mu2) * u + (mu1 * mu1 + mu2 * mu2) / 6 + mu1 * mu2 / 2) / (mu1 * mu2)


def bernoulli_B33(u: complex, mu1: complex, mu2: complex, mu3: complex) -> complex:
    """Third multiple Bernoulli polynomial B_{3,3}(u|μ1,μ2,μ3)"""
    u, mu1, mu2, mu3 = complex(u), complex(mu1), complex(mu2), complex(mu3)
    product = mu1 * mu2 * mu3
    if product == 0:
        raise DomainViolationError("B33 needs nonzero periods", location=product, bound=0.0)
    s1 = mu1 + mu2 + mu3
    squares = mu1 * mu1 + mu2 * mu2 + mu3 * mu3
    pairs = mu1 * mu2 + mu1 * mu3 + mu2 * mu3
    cubic = u ** 3 - 1.5 * u * u * s1 + 0.5 * u * (squares + 3 * pairs) - 0.25 * s1 * pairs
    return cubic / product
