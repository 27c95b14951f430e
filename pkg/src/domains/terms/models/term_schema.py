"""
JSON document schema for TermSpec

    {"n": 2, "factors": [{"m": [1, 0], "eps": 1, "sigma": 0}],
     "constraints": [{"c": [1, 1], "k": 0, "solve": 1}]}
"""

from typing import List, Optional

import orjson
from pydantic import BaseModel, Field

from domains.terms.models.term_spec import Constraint, TermFactor, TermSpec


class TermFactorDocument(BaseModel):
    """One elliptic gamma factor"""
    m: List[int] = Field(..., description="Monomial exponent vector, one entry per variable")
    eps: int = Field(..., description="Multiplicity; negative values put the factor in the denominator")
    sigma: int = Field(default=0, description="Power of pq multiplying the monomial")


class ConstraintDocument(BaseModel):
    """Balancing condition x^c = (pq)^k"""
    c: List[int] = Field(..., description="Exponent vector of the constrained monomial")
    k: int = Field(default=0, description="Power of pq on the right-hand side")
    solve: int = Field(..., description="Variable (0-based) eliminated by the constraint")


class TermSpecDocument(BaseModel):
    """Serialized elliptic hypergeometric term"""
    n: int = Field(..., ge=0, description="Number of multiplicative variables")
    factors: List[TermFactorDocument] = Field(default_factory=list, description="Elliptic gamma factors")
    constraints: List[ConstraintDocument] = Field(default_factory=list, description="Balancing conditions")
    variables: Optional[List[str]] = Field(default=None, description="Optional variable names")
    name: str = Field(default="term", description="Label echoed in reports")

    def to_term_spec(self) -> TermSpec:
        return TermSpec(
            n=self.n,
            factors=tuple(TermFactor(m=tuple(f.m), eps=f.eps, sigma=f.sigma) for f in self.factors),
            constraints=tuple(Constraint(c=tuple(c.c), k=c.k, solve=c.solve) for c in self.constraints),
            variables=tuple(self.variables or ()),
            name=self.name,
        )

    @classmethod
    def from_term_spec(cls, term: TermSpec) -> "TermSpecDocument":
        return cls(
            n=term.n,
            factors=[TermFactorDocument(m=list(f.m), eps=f.eps, sigma=f.sigma) for f in term.factors],
            constraints=[ConstraintDocument(c=list(c.c), k=c.k, solve=c.solve) for c in term.constraints],
            variables=list(term.variables),
            name=term.name,
        )


def load_term_spec(raw: bytes) -> TermSpec:
    """
    Parse a TermSpec JSON document

    Raises:
        orjson.JSONDecodeError: malformed JSON
        pydantic.ValidationError: schema violation
        DomainViolationError: structurally invalid term (zero multiplicity, length mismatch)
    """
    return TermSpecDocument.model_validate(orjson.loads(raw)).to_term_spec()


def dump_term_spec(term: TermSpec) -> bytes:
    return orjson.dumps(TermSpecDocument.from_term_spec(term).model_dump(), option=orjson.OPT_INDENT_2)
