"""
Reference values for the smallest torus knots and links.

s*-basis tables are stored with every exponent as a multiple of k, so one
entry covers the whole family. g-tables are complete: any entry of the listed
degrees that is not written down is zero.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .combinatorics import Partition, PartitionTuple
from .polyring import ExactLaurent, RationalFunction, bracket_laurent
from .torus import SStarExpansion, TorusLinkSpec
from .types import Variable

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SStarGolden:
    """v^{v_rate * k} * sum c * t^{t_rate * k} * s*_lam for the family T(r l, k l)."""

    r: int
    l: int  # noqa: E741
    colors: str
    v_rate: Fraction
    terms: Tuple[Tuple[str, int, Fraction], ...]

    def partition_tuple(self) -> PartitionTuple:
        return PartitionTuple.from_string(self.colors)

    def expansion(self, k: int) -> SStarExpansion:
        terms = tuple((Partition.from_string(lam), c, rate * k) for lam, c, rate in self.terms)
        return SStarExpansion(v_exponent=self.v_rate * k, terms=terms)

    def link(self, k: int) -> TorusLinkSpec:
        return TorusLinkSpec(self.r, k, self.l)


def _sstar(r: int, l: int, colors: str, v_rate: Fraction, *terms: Tuple[str, int, Fraction]) -> SStarGolden:  # noqa: E741
    return SStarGolden(r=r, l=l, colors=colors, v_rate=Fraction(v_rate), terms=tuple((lam, c, Fraction(rate)) for lam, c, rate in terms))


SSTAR_GOLDEN: List[SStarGolden] = [
    # (2, k) torus knots
    _sstar(2, 1, "1", HALF, ("2", 1, -HALF), ("1,1", -1, HALF)),
    _sstar(2, 1, "2", 1, ("4", 1, -1), ("3,1", -1, 1), ("2,2", 1, 2)),
    _sstar(2, 1, "1,1", 1, ("2,2", 1, -2), ("2,1,1", -1, -1), ("1,1,1,1", 1, 1)),
    _sstar(2, 1, "3", Fraction(3, 2), ("6", 1, Fraction(-3, 2)), ("5,1", -1, Fraction(3, 2)), ("4,2", 1, Fraction(7, 2)), ("3,3", -1, Fraction(9, 2))),
    _sstar(
        2,
        1,
        "2,1",
        Fraction(3, 2),
        ("4,2", 1, Fraction(-5, 2)),
        ("4,1,1", -1, Fraction(-3, 2)),
        ("3,3", -1, Fraction(-3, 2)),
        ("2,2,2", 1, Fraction(3, 2)),
        ("3,1,1,1", 1, Fraction(3, 2)),
        ("2,2,1,1", -1, Fraction(5, 2)),
    ),
    _sstar(
        2,
        1,
        "1,1,1",
        Fraction(3, 2),
        ("2,2,2", 1, Fraction(-9, 2)),
        ("2,2,1,1", -1, Fraction(-7, 2)),
        ("2,1,1,1,1", 1, Fraction(-3, 2)),
        ("1,1,1,1,1,1", -1, Fraction(3, 2)),
    ),
    # (3, k) torus knots
    _sstar(3, 1, "1", 1, ("3", 1, -1), ("2,1", -1, 0), ("1,1,1", 1, 1)),
    _sstar(3, 1, "2", 2, ("6", 1, -2), ("5,1", -1, 0), ("4,1,1", 1, 2), ("3,3", 1, 2), ("3,2,1", -1, 3), ("2,2,2", 1, 4)),
    _sstar(3, 1, "1,1", 2, ("3,3", 1, -4), ("3,2,1", -1, -3), ("3,1,1,1", 1, -2), ("2,2,2", 1, -2), ("2,1,1,1,1", -1, 0), ("1,1,1,1,1,1", 1, 2)),
    # (2, 2k) torus links
    _sstar(1, 2, "1|1", 0, ("2", 1, -1), ("1,1", 1, 1)),
    _sstar(1, 2, "2|1", 0, ("3", 1, -2), ("2,1", 1, 1)),
    _sstar(1, 2, "1,1|1", 0, ("2,1", 1, -1), ("1,1,1", 1, 2)),
    _sstar(1, 2, "2|2", 0, ("4", 1, -4), ("3,1", 1, 0), ("2,2", 1, 2)),
    _sstar(1, 2, "2|1,1", 0, ("3,1", 1, -2), ("2,1,1", 1, 2)),
    _sstar(1, 2, "1,1|1,1", 0, ("2,2", 1, -2), ("2,1,1", 1, 0), ("1,1,1,1", 1, 4)),
    # (3, 3k) torus links
    _sstar(1, 3, "1|1|1", 0, ("3", 1, -3), ("2,1", 2, 0), ("1,1,1", 1, 3)),
    _sstar(1, 3, "2|1|1", 0, ("4", 1, -5), ("3,1", 2, -1), ("2,2", 1, 1), ("2,1,1", 1, 3)),
    _sstar(1, 3, "1,1|1|1", 0, ("3,1", 1, -3), ("2,2", 1, -1), ("2,1,1", 2, 1), ("1,1,1,1", 1, 5)),
]


GTableGolden = Dict[str, Dict[str, Dict[int, int]]]


def _u(*pairs: Tuple[int, int]) -> Dict[int, int]:
    return dict(pairs)


ONE_U = _u((0, 1))
U_PLUS_INV = _u((1, 1), (-1, 1))
U_PLUS_ONE_PLUS_INV = _u((1, 1), (0, 1), (-1, 1))

# colors -> lam -> {u exponent: coefficient}
G_TORUS_KNOT_2: GTableGolden = {
    "1": {"2": ONE_U},
    "1,1": {"2,2": ONE_U},
    "2": {},
    "1,1,1": {"2,2,2": U_PLUS_INV, "3,2,1": ONE_U},
    "2,1": {"2,2,2": ONE_U},
    "3": {},
    "1,1,1,1": {
        "2,2,2,2": _u((3, 1), (1, 2), (0, 1), (-1, 2), (-3, 1)),
        "3,2,2,1": _u((2, 1), (1, 1), (0, 2), (-1, 1), (-2, 1)),
        "4,2,2": U_PLUS_INV,
        "3,3,1,1": U_PLUS_INV,
        "4,3,1": ONE_U,
        "4,2,1,1": ONE_U,
        "3,3,2": ONE_U,
    },
    "2,1,1": {
        "2,2,2,2": _u((2, 1), (1, 1), (0, 2), (-1, 1), (-2, 1)),
        "3,2,2,1": U_PLUS_ONE_PLUS_INV,
        "4,2,2": ONE_U,
        "3,3,1,1": ONE_U,
    },
    "2,2": {"2,2,2,2": U_PLUS_INV, "3,2,2,1": ONE_U},
    "3,1": {"2,2,2,2": ONE_U},
    "4": {},
}

G_TORUS_KNOT_3: GTableGolden = {
    "1": {"3": ONE_U},
    "1,1": {"3,3": U_PLUS_INV, "4,2": ONE_U},
    "2": {"3,3": ONE_U},
    "1,1,1": {
        "3,3,3": _u((4, 1), (2, 2), (1, 2), (0, 2), (-1, 2), (-2, 2), (-4, 1)),
        "4,3,2": _u((3, 1), (2, 1), (1, 2), (0, 3), (-1, 2), (-2, 1), (-3, 1)),
        "5,3,1": _u((2, 1), (1, 1), (0, 2), (-1, 1), (-2, 1)),
        "6,3": U_PLUS_INV,
        "5,2,2": U_PLUS_INV,
        "4,4,1": U_PLUS_INV,
        "6,2,1": ONE_U,
        "5,4": ONE_U,
    },
    "2,1": {
        "3,3,3": _u((3, 1), (2, 1), (1, 2), (0, 3), (-1, 2), (-2, 1), (-3, 1)),
        "4,3,2": _u((2, 1), (1, 2), (0, 2), (-1, 2), (-2, 1)),
        "5,3,1": U_PLUS_ONE_PLUS_INV,
        "6,3": ONE_U,
        "5,2,2": ONE_U,
        "4,4,1": ONE_U,
    },
    "3": {"3,3,3": U_PLUS_INV, "4,3,2": ONE_U},
}

# One orientation of each pair; swapping the two colors gives the rest.
G_TORUS_LINK_2: GTableGolden = {
    "|1": {"1": ONE_U},
    "1|1": {"2": ONE_U},
    "2|1": {"3": ONE_U},
    "1,1|1": {},
    "3|1": {"4": ONE_U},
    "4|1": {"5": ONE_U},
    "2|2": {"4": U_PLUS_ONE_PLUS_INV, "3,1": ONE_U},
    "2|1,1": {"4": ONE_U},
    "1,1|1,1": {},
    "3|2": {"5": _u((2, 1), (1, 1), (0, 3), (-1, 1), (-2, 1)), "4,1": U_PLUS_ONE_PLUS_INV, "3,2": ONE_U},
    "3|1,1": {"5": U_PLUS_ONE_PLUS_INV, "4,1": ONE_U},
    "2,1|2": {"5": U_PLUS_ONE_PLUS_INV, "4,1": ONE_U},
    "2,1|1,1": {"5": ONE_U},
}


def g_golden_laurent(values: Dict[int, int]) -> ExactLaurent:
    """A golden u-polynomial, u stored in the t slot as in lmv.GTable."""
    return ExactLaurent({(e, 0): c for e, c in values.items()})


def swap_two_colors(table: GTableGolden) -> GTableGolden:
    """Close a two-component table under exchanging the components."""
    result: GTableGolden = {}
    for colors, row in table.items():
        a, b = colors.split("|")
        result.setdefault(colors, row)
        result.setdefault(f"{b}|{a}", row)
    return result


def knot_fundamental_closed_form(k: int) -> RationalFunction:
    """W_(1) of T(2, k): [1]_v/[1]_t ([k+1]/[2] v^{(k-1)/2} - [k-1]/[2] v^{(k+1)/2})."""
    if k % 2 == 0:
        raise ValueError(f"k must be odd, got {k}")
    inner = (bracket_laurent(Variable.T, k + 1).shift(0, Fraction(k - 1, 2)) - bracket_laurent(Variable.T, k - 1).shift(0, Fraction(k + 1, 2)))
    return RationalFunction(inner * bracket_laurent(Variable.NU, 1), [(Variable.T, 2), (Variable.T, 1)])


def link_fundamental_closed_form(k: int) -> RationalFunction:
    """W_{(1),(1)} of T(2, 2k): [1]_v/[1]_t ((t^{k-1/2} + t^{1/2-k}) v^{1/2} - (t^{k+1/2} + t^{-k-1/2}) v^{-1/2}) / [2]_t."""
    low = Fraction(2 * k - 1, 2)
    high = Fraction(2 * k + 1, 2)
    inner = ExactLaurent({(low, HALF): 1, (-low, HALF): 1, (high, -HALF): -1, (-high, -HALF): -1})
    return RationalFunction(inner * bracket_laurent(Variable.NU, 1), [(Variable.T, 2), (Variable.T, 1)])
