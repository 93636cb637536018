"""
Serialized forms of every result the package emits.

Exponents and coefficients are written as exact "p/q" strings, terms in
canonical ascending (e_t, e_v) order, so JSON output is byte-stable.
"""

from collections import Counter
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from .polyring import Bracket, ExactLaurent, RationalFunction
from .types import Variable

SCHEMA_VERSION = 1
CACHE_VERSION = 1


def fraction_text(value: Fraction) -> str:
    return str(value)


class LaurentTerm(BaseModel):
    """One monomial c * t^et * v^ev."""

    et: str
    ev: str
    c: str


class RationalRecord(BaseModel):
    """A RationalFunction: numerator terms over a product of brackets."""

    num: List[LaurentTerm]
    den: List[Tuple[str, int]] = []
    text: str = ""


def laurent_terms(p: ExactLaurent) -> List[LaurentTerm]:
    return [LaurentTerm(et=fraction_text(et), ev=fraction_text(ev), c=fraction_text(c)) for et, ev, c in p.terms()]


def rational_record(value) -> RationalRecord:
    if isinstance(value, ExactLaurent):
        return RationalRecord(num=laurent_terms(value), den=[], text=str(value))
    den = [(b.variable.value, b.m) for b in value.denominator]
    return RationalRecord(num=laurent_terms(value.numerator), den=den, text=str(value))


def laurent_from_terms(terms: List[LaurentTerm]) -> ExactLaurent:
    return ExactLaurent({(Fraction(term.et), Fraction(term.ev)): Fraction(term.c) for term in terms})


def rational_from_record(record: RationalRecord) -> RationalFunction:
    den = Counter(Bracket(Variable.from_string(var), m) for var, m in record.den)
    return RationalFunction(laurent_from_terms(record.num), den)


class LinkRecord(BaseModel):
    r: int
    k: int
    l: int  # noqa: E741


class SStarTerm(BaseModel):
    """c * t^t_exponent * s*_partition."""

    partition: str
    c: int
    t_exponent: str


class SStarBasis(BaseModel):
    v_exponent: str
    terms: List[SStarTerm]


class ColoredInvariantRecord(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    link: LinkRecord
    colors: str
    value: RationalRecord
    sstar_basis: Optional[SStarBasis] = None
    homfly: Optional[RationalRecord] = None


class BpsEntry(BaseModel):
    mu: str
    g: int
    Q: str
    N: str


class FindingRecord(BaseModel):
    """A conjecture-stage failure, kept as a reproducible artifact."""

    link: LinkRecord
    degree: List[int]
    stage: str
    message: str
    witness: Optional[str] = None


class DegreeReport(BaseModel):
    degree: List[int]
    f: Dict[str, RationalRecord]
    fhat: Dict[str, RationalRecord]
    bps: List[BpsEntry]
    all_integer: bool
    q_parity_uniform: bool
    q_parity: str


class LmvReport(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    link: LinkRecord
    caps: List[int]
    degrees: List[DegreeReport]
    q_parity_global: str
    findings: List[FindingRecord]


class GEntry(BaseModel):
    lam: str
    g: List[LaurentTerm]
    text: str


class GTableRecord(BaseModel):
    sizes: List[int]
    colors: str
    entries: List[GEntry]
    integral: bool
    palindromic: bool


class GTableReport(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    link: LinkRecord
    tables: List[GTableRecord]
    findings: List[FindingRecord]


class CheckRecord(BaseModel):
    """Pass/fail of one oracle or golden comparison."""

    name: str
    passed: bool
    detail: str = ""


class CheckReport(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    kind: str
    checks: List[CheckRecord]
    passed: bool


class CharacterTableRecord(BaseModel):
    """One persisted character table; checksum covers partitions and values."""

    n: int
    partitions: List[str]
    values: List[List[int]]
    checksum: str


class CharacterCacheFile(BaseModel):
    version: int = CACHE_VERSION
    tables: List[CharacterTableRecord] = []


def link_record(r: int, k: int, l: int) -> LinkRecord:  # noqa: E741
    return LinkRecord(r=r, k=k, l=l)

