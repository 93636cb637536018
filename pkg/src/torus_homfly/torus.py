"""
Colored HOMFLY invariants of the torus links T(rl, kl).

    W = v^{k(r-1)n/2} * sum_lam c^lam * t^{e_lam} * s*_lam,
    e_lam = k r (sum_i kappa_i)/2 - k kappa_lam/(2r),

with c^lam the stretched Littlewood-Richardson coefficients of the colors.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .combinatorics import Partition, PartitionTuple, kappa
from .errors import InvalidColors, NotCoprime, WrongColors
from .polyring import ExactLaurent, RationalFunction, bracket_laurent
from .symfunc import s_star_hook, schur_to_powersum, stretched_lr
from .types import Variable

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class TorusLinkSpec:
    """T(rl, kl): l parallel (r, k) torus knots."""

    r: int
    k: int
    l: int = 1  # noqa: E741

    def __post_init__(self):
        for name in ("r", "k", "l"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{name} must be an int, got {value!r}")
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")
        if self.k == 0:
            raise ValueError("k must be nonzero")
        if self.l < 1:
            raise ValueError(f"l must be positive, got {self.l}")
        if math.gcd(self.r, abs(self.k)) != 1:
            raise NotCoprime(f"gcd(r={self.r}, k={self.k}) != 1")

    @property
    def strands(self) -> int:
        return self.r * self.l

    def name(self) -> str:
        return f"T({self.r * self.l},{self.k * self.l})"

    def __str__(self) -> str:
        return f"{self.name()} [r={self.r}, k={self.k}, l={self.l}]"


@dataclass(frozen=True)
class ColoredInvariant:
    link: TorusLinkSpec
    colors: PartitionTuple
    value: RationalFunction

    def __post_init__(self):
        check_half_integral(self.value)


@dataclass(frozen=True)
class SStarExpansion:
    """v^{v_exponent} * sum c * t^{t_exponent} * s*_lam, the form reports print."""

    v_exponent: Fraction
    terms: Tuple[Tuple[Partition, int, Fraction], ...]

    def as_dict(self) -> Dict[Partition, Tuple[int, Fraction]]:
        return {lam: (c, e) for lam, c, e in self.terms}


def check_half_integral(value: RationalFunction) -> None:
    for (et, ev), _ in value.numerator.items():
        if (2 * et).denominator != 1 or (2 * ev).denominator != 1:
            raise ArithmeticError(f"exponent t^{et} v^{ev} is not a half-integer in {value}")


def _validate_colors(link: TorusLinkSpec, colors: PartitionTuple) -> None:
    if len(colors) != link.l:
        raise InvalidColors(f"{link.name()} has {link.l} components but {len(colors)} colors were given")
    for i, entry in enumerate(colors):
        if entry.is_empty():
            raise InvalidColors(f"color {i + 1} of {link.name()} is empty; use sublink() to drop components")


def v_prefactor_exponent(link: TorusLinkSpec, n: int) -> Fraction:
    return Fraction(link.k * (link.r - 1) * n, 2)


def sstar_basis(link: TorusLinkSpec, colors: PartitionTuple) -> SStarExpansion:
    _validate_colors(link, colors)
    r, k = link.r, link.k
    kappa_sum = sum(kappa(entry) for entry in colors)
    lr = stretched_lr(colors, r)
    terms = []
    for lam, c in lr.coefficients:
        e_t = Fraction(k * r * kappa_sum, 2) - Fraction(k * kappa(lam), 2 * r)
        terms.append((lam, c, e_t))
    return SStarExpansion(v_exponent=v_prefactor_exponent(link, colors.size()), terms=tuple(terms))


def sum_sstar_expansion(expansion: SStarExpansion) -> RationalFunction:
    total = RationalFunction.zero()
    for lam, c, e_t in expansion.terms:
        total = total + s_star_hook(lam).shift(e_t, 0).scale(c)
    return total.shift(0, expansion.v_exponent)


def colored_homfly_torus(link: TorusLinkSpec, colors: PartitionTuple) -> ColoredInvariant:
    value = sum_sstar_expansion(sstar_basis(link, colors))
    return ColoredInvariant(link=link, colors=colors, value=value)


def powersum_form(link: TorusLinkSpec, colors: PartitionTuple) -> Dict[Partition, ExactLaurent]:
    """
    w_sigma with W = v^{k(r-1)n/2} * sum_sigma w_sigma * P_sigma, P_sigma = prod_j [sigma_j]_v/[sigma_j]_t.

    The w_sigma are Laurent polynomials in t alone.
    """
    expansion = sstar_basis(link, colors)
    weights: Dict[Partition, ExactLaurent] = {}
    for lam, c, e_t in expansion.terms:
        monomial = ExactLaurent.monomial(e_t, 0, c)
        for sigma, w in schur_to_powersum(lam).items():
            weights[sigma] = weights.get(sigma, ExactLaurent.zero()) + monomial.scale(w)
    return {sigma: w for sigma, w in weights.items() if w}


def sublink(link: TorusLinkSpec, m: int) -> TorusLinkSpec:
    """Any m components of T(rl, kl) form T(rm, km)."""
    if not 1 <= m <= link.l:
        raise ValueError(f"sublink size must be in 1..{link.l}, got {m}")
    return TorusLinkSpec(link.r, link.k, m)


def mirror(link: TorusLinkSpec) -> TorusLinkSpec:
    return TorusLinkSpec(link.r, -link.k, link.l)


def invert_both(value: RationalFunction) -> RationalFunction:
    return value.invert_variable(Variable.T).invert_variable(Variable.NU)


def linking_number(link: TorusLinkSpec) -> int:
    """Total pairwise linking number; two parallel (r, k) curves link r*k times."""
    return math.comb(link.l, 2) * link.r * link.k


def _unknot_ratio() -> RationalFunction:
    # [1]_t / [1]_v
    return RationalFunction.bracket_ratio(bracket_laurent(Variable.T, 1), Variable.NU, 1)


def homfly_specialize(w: ColoredInvariant, lk: Optional[int] = None) -> RationalFunction:
    """P = v^{lk} [1]_t/[1]_v W_{(1),...,(1)}; the unknot maps to 1."""
    single = Partition((1,))
    if any(entry != single for entry in w.colors):
        raise WrongColors(f"HOMFLY specialization needs every color (1), got {w.colors}")
    if lk is None:
        lk = linking_number(w.link)
    return (w.value * _unknot_ratio()).shift(0, lk)


def homfly(link: TorusLinkSpec) -> RationalFunction:
    colors = PartitionTuple(tuple(Partition((1,)) for _ in range(link.l)))
    return homfly_specialize(colored_homfly_torus(link, colors))


def unlink_homfly(m: int) -> RationalFunction:
    """The m-component unlink: ([1]_v/[1]_t)^{m-1}."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    ratio = RationalFunction.bracket_ratio(bracket_laurent(Variable.NU, 1), Variable.T, 1)
    return ratio ** (m - 1)


def skein_holds(p_plus: RationalFunction, p_minus: RationalFunction, p_zero: RationalFunction) -> bool:
    """v^{-1/2} P+ - v^{1/2} P- = (t^{-1/2} - t^{1/2}) P0."""
    left = p_plus.shift(0, -HALF) - p_minus.shift(0, HALF)
    right = p_zero * RationalFunction.coerce(-bracket_laurent(Variable.T, 1))
    return left == right


def two_strand_homfly(j: int) -> RationalFunction:
    """HOMFLY of the closure of sigma_1^j on two parallel strands."""
    if j == 0:
        return unlink_homfly(2)
    if j % 2:
        return homfly(TorusLinkSpec(2, j, 1))
    return homfly(TorusLinkSpec(1, j // 2, 2))


def skein_triple_two_strand(j: int) -> Tuple[RationalFunction, RationalFunction, RationalFunction]:
    """(P+, P-, P0) for the crossing change sigma_1^j -> sigma_1^{j-2}, smoothing sigma_1^{j-1}."""
    return two_strand_homfly(j), two_strand_homfly(j - 2), two_strand_homfly(j - 1)


def color_permutations(colors: PartitionTuple) -> List[PartitionTuple]:
    seen = []
    for order in itertools.permutations(colors.entries):
        candidate = PartitionTuple(tuple(order))
        if candidate not in seen:
            seen.append(candidate)
    return seen
