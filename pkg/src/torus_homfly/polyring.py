"""
Exact Laurent polynomials in t^{1/2}, v^{1/2} (v stands for nu) and rational
functions whose denominators are products of brackets [m]_x = x^{m/2} - x^{-m/2}.

Exponents are exact rationals, coefficients are Fractions. Restricting
denominators to brackets means polynomiality is decided by univariate exact
division, with no multivariate gcd anywhere.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple, Union

import sympy

from .errors import DenominatorZero, NotPalindromic, NotPolynomial
from .types import Variable

Key = Tuple[Fraction, Fraction]
Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


def _sympy_rational(value: Fraction) -> Any:
    return sympy.Rational(value.numerator, value.denominator)


def _as_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a valid coefficient")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"Cannot use {value!r} as an exact rational")


def _format_exponent(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


class ExactLaurent:
    """Immutable bivariate Laurent polynomial {(e_t, e_v): coefficient}."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Tuple[Any, Any], Any]] = None):
        clean: Dict[Key, Fraction] = {}
        if terms:
            for (et, ev), coeff in terms.items():
                key = (_as_fraction(et), _as_fraction(ev))
                clean[key] = clean.get(key, _ZERO) + _as_fraction(coeff)
        self._terms: Dict[Key, Fraction] = {k: c for k, c in clean.items() if c}

    @classmethod
    def _raw(cls, terms: Dict[Key, Fraction]) -> "ExactLaurent":
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "ExactLaurent":
        return cls._raw({})

    @classmethod
    def one(cls) -> "ExactLaurent":
        return cls._raw({(_ZERO, _ZERO): _ONE})

    @classmethod
    def constant(cls, value: Scalar) -> "ExactLaurent":
        value = _as_fraction(value)
        return cls._raw({(_ZERO, _ZERO): value} if value else {})

    @classmethod
    def monomial(cls, e_t: Scalar = 0, e_v: Scalar = 0, coeff: Scalar = 1) -> "ExactLaurent":
        coeff = _as_fraction(coeff)
        if not coeff:
            return cls.zero()
        return cls._raw({(_as_fraction(e_t), _as_fraction(e_v)): coeff})

    @classmethod
    def variable_power(cls, variable: Variable, exponent: Scalar, coeff: Scalar = 1) -> "ExactLaurent":
        if variable is Variable.T:
            return cls.monomial(exponent, 0, coeff)
        return cls.monomial(0, exponent, coeff)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[Tuple[Key, Fraction]]:
        return iter(self._terms.items())

    def terms(self) -> List[Tuple[Fraction, Fraction, Fraction]]:
        """Canonical order: ascending by (e_t, e_v)."""
        return [(et, ev, c) for (et, ev), c in sorted(self._terms.items())]

    def coefficient(self, e_t: Scalar = 0, e_v: Scalar = 0) -> Fraction:
        return self._terms.get((_as_fraction(e_t), _as_fraction(e_v)), _ZERO)

    def is_constant(self) -> bool:
        return all(key == (_ZERO, _ZERO) for key in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((_ZERO, _ZERO), _ZERO)

    def exponents(self, variable: Variable) -> List[Fraction]:
        index = 0 if variable is Variable.T else 1
        return sorted({key[index] for key in self._terms})

    def involves(self, variable: Variable) -> bool:
        index = 0 if variable is Variable.T else 1
        return any(key[index] != 0 for key in self._terms)

    def has_integral_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def exponents_in(self, variable: Variable, step: Fraction) -> bool:
        """True when every exponent of variable is an integer multiple of step."""
        index = 0 if variable is Variable.T else 1
        return all((key[index] / step).denominator == 1 for key in self._terms)

    def group_by(self, variable: Variable) -> Dict[Fraction, "ExactLaurent"]:
        """Split by the exponent of variable; values keep only the other variable."""
        groups: Dict[Fraction, Dict[Key, Fraction]] = {}
        for (et, ev), c in self._terms.items():
            if variable is Variable.NU:
                groups.setdefault(ev, {})[(et, _ZERO)] = c
            else:
                groups.setdefault(et, {})[(_ZERO, ev)] = c
        return {e: ExactLaurent._raw(terms) for e, terms in groups.items()}

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def coerce(value: Any) -> "ExactLaurent":
        if isinstance(value, ExactLaurent):
            return value
        return ExactLaurent.constant(value)

    def __add__(self, other: Any) -> "ExactLaurent":
        if isinstance(other, RationalFunction):
            return NotImplemented
        other = ExactLaurent.coerce(other)
        if not other._terms:
            return self
        result = dict(self._terms)
        for key, c in other._terms.items():
            value = result.get(key, _ZERO) + c
            if value:
                result[key] = value
            else:
                result.pop(key, None)
        return ExactLaurent._raw(result)

    __radd__ = __add__

    def __neg__(self) -> "ExactLaurent":
        return ExactLaurent._raw({key: -c for key, c in self._terms.items()})

    def __sub__(self, other: Any) -> "ExactLaurent":
        if isinstance(other, RationalFunction):
            return NotImplemented
        return self + (-ExactLaurent.coerce(other))

    def __rsub__(self, other: Any) -> "ExactLaurent":
        return ExactLaurent.coerce(other) + (-self)

    def scale(self, factor: Scalar) -> "ExactLaurent":
        factor = _as_fraction(factor)
        if not factor:
            return ExactLaurent.zero()
        if factor == 1:
            return self
        return ExactLaurent._raw({key: c * factor for key, c in self._terms.items()})

    def __mul__(self, other: Any) -> "ExactLaurent":
        if isinstance(other, RationalFunction):
            return NotImplemented
        if not isinstance(other, ExactLaurent):
            return self.scale(_as_fraction(other))
        if len(self._terms) > len(other._terms):
            big, small = self._terms, other._terms
        else:
            big, small = other._terms, self._terms
        result: Dict[Key, Fraction] = {}
        get = result.get
        for (at, av), ac in small.items():
            for (bt, bv), bc in big.items():
                key = (at + bt, av + bv)
                result[key] = get(key, _ZERO) + ac * bc
        return ExactLaurent._raw({k: c for k, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ExactLaurent":
        if exponent < 0:
            raise ValueError("ExactLaurent only supports nonnegative integer powers")
        result = ExactLaurent.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def shift(self, d_t: Scalar = 0, d_v: Scalar = 0) -> "ExactLaurent":
        """Multiply by the monomial t^{d_t} v^{d_v}."""
        d_t, d_v = _as_fraction(d_t), _as_fraction(d_v)
        return ExactLaurent._raw({(et + d_t, ev + d_v): c for (et, ev), c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunction):
            return other == self
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = ExactLaurent.constant(other)
        if not isinstance(other, ExactLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- structural maps ---------------------------------------------------

    def adams(self, d: int) -> "ExactLaurent":
        """Substitute t -> t^d, v -> v^d."""
        if d < 1:
            raise ValueError(f"Adams degree must be positive, got {d}")
        if d == 1:
            return self
        return ExactLaurent._raw({(et * d, ev * d): c for (et, ev), c in self._terms.items()})

    def invert_variable(self, variable: Variable) -> "ExactLaurent":
        if variable is Variable.T:
            return ExactLaurent._raw({(-et, ev): c for (et, ev), c in self._terms.items()})
        return ExactLaurent._raw({(et, -ev): c for (et, ev), c in self._terms.items()})

    def is_palindromic(self, variable: Variable) -> bool:
        return self.invert_variable(variable) == self

    def divide_bracket(self, variable: Variable, m: int) -> Optional["ExactLaurent"]:
        """
        Exact quotient by [m]_x, or None when [m]_x does not divide.

        [m]_x = x^{-m/2}(x^m - 1). Division by x^m - 1 runs independently on
        each class of terms sharing the other exponent and the same exponent
        of x modulo m; a class divides iff its coefficients sum to zero.
        """
        if m < 1:
            raise ValueError(f"bracket index must be positive, got {m}")
        if not self._terms:
            return self
        index = 0 if variable is Variable.T else 1
        classes: Dict[Tuple[Fraction, Fraction], Dict[Fraction, Fraction]] = {}
        for key, c in self._terms.items():
            e = key[index]
            other = key[1 - index]
            classes.setdefault((other, e % m), {})[e] = c
        half = Fraction(m, 2)
        quotient: Dict[Key, Fraction] = {}
        for (other, _), members in classes.items():
            e_max = max(members)
            e_min = min(members)
            carry = _ZERO
            e = e_max
            while e > e_min:
                carry += members.get(e, _ZERO)
                if carry:
                    shifted = e - m + half
                    quotient[(shifted, other) if index == 0 else (other, shifted)] = carry
                e -= m
            if carry + members.get(e_min, _ZERO) != 0:
                return None
        return ExactLaurent._raw(quotient)

    def evaluate(self, t_half: Scalar, v_half: Scalar = 1) -> Fraction:
        """Exact value at t^{1/2} = t_half, v^{1/2} = v_half (exponents must be half-integers)."""
        t_half, v_half = _as_fraction(t_half), _as_fraction(v_half)
        total = _ZERO
        for (et, ev), c in self._terms.items():
            nt, nv = 2 * et, 2 * ev
            if nt.denominator != 1 or nv.denominator != 1:
                raise ValueError(f"cannot evaluate fractional exponent t^{et} v^{ev} at rational points")
            total += c * t_half ** int(nt) * v_half ** int(nv)
        return total

    def to_sympy(self, t_half_symbol: Any, v_half_symbol: Any) -> Any:
        """Sympy expression in symbols standing for t^{1/2} and v^{1/2}."""
        expr = sympy.Integer(0)
        for (et, ev), c in self._terms.items():
            expr += sympy.Rational(c.numerator, c.denominator) * t_half_symbol ** _sympy_rational(2 * et) * v_half_symbol ** _sympy_rational(2 * ev)
        return expr

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for et, ev, c in self.terms():
            factors = []
            if et:
                factors.append("t" if et == 1 else f"t^{_format_exponent(et)}")
            if ev:
                factors.append("v" if ev == 1 else f"v^{_format_exponent(ev)}")
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"ExactLaurent({self})"


@lru_cache(maxsize=None)
def _bracket_cached(variable: Variable, m: int) -> ExactLaurent:
    half = Fraction(m, 2)
    if variable is Variable.T:
        return ExactLaurent._raw({(half, _ZERO): _ONE, (-half, _ZERO): -_ONE})
    return ExactLaurent._raw({(_ZERO, half): _ONE, (_ZERO, -half): -_ONE})


def bracket_laurent(variable: Variable, m: int) -> ExactLaurent:
    """[m]_x = x^{m/2} - x^{-m/2}; [0] = 0 and [-m] = -[m]."""
    if m == 0:
        return ExactLaurent.zero()
    if m < 0:
        return -_bracket_cached(variable, -m)
    return _bracket_cached(variable, m)


class Bracket(NamedTuple):
    variable: Variable
    m: int

    def laurent(self) -> ExactLaurent:
        return bracket_laurent(self.variable, self.m)

    def sort_key(self) -> Tuple[int, str]:
        return (-self.m, self.variable.value)

    def __str__(self) -> str:
        return f"[{self.m}]_{self.variable.value}"


DenominatorSpec = Union[None, Mapping[Bracket, int], Iterable[Bracket]]


def _count_brackets(spec: DenominatorSpec) -> Dict[Bracket, int]:
    counts: Dict[Bracket, int] = {}
    if spec is None:
        return counts
    if isinstance(spec, Mapping):
        items = spec.items()
    else:
        items = ((b, 1) for b in spec)
    for bracket, count in items:
        if not isinstance(bracket, Bracket):
            bracket = Bracket(*bracket)
        if bracket.m < 1:
            raise ValueError(f"bracket index must be positive, got {bracket}")
        if count:
            counts[bracket] = counts.get(bracket, 0) + count
    return counts


class RationalFunction:
    """
    numerator / prod [m]_x over a multiset of single-variable brackets.

    Every constructor cancels brackets that divide the numerator, largest
    index first. Equality is decided by cross-multiplication.
    """

    __slots__ = ("numerator", "_den")

    def __init__(self, numerator: Any = 0, denominator: DenominatorSpec = None, reduce: bool = True):
        self.numerator: ExactLaurent = ExactLaurent.coerce(numerator)
        self._den: Dict[Bracket, int] = _count_brackets(denominator)
        if reduce:
            self._reduce()

    @classmethod
    def _raw(cls, numerator: ExactLaurent, den: Dict[Bracket, int], reduce: bool = True) -> "RationalFunction":
        obj = object.__new__(cls)
        obj.numerator = numerator
        obj._den = den
        if reduce:
            obj._reduce()
        return obj

    def _reduce(self) -> None:
        if not self._den:
            return
        if self.numerator.is_zero():
            self._den = {}
            return
        den = self._den
        num = self.numerator
        for bracket in sorted(den, key=Bracket.sort_key):
            while den.get(bracket, 0) > 0:
                quotient = num.divide_bracket(bracket.variable, bracket.m)
                if quotient is None:
                    break
                num = quotient
                den[bracket] -= 1
                if den[bracket] == 0:
                    del den[bracket]
        self.numerator = num

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls._raw(ExactLaurent.zero(), {}, reduce=False)

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls._raw(ExactLaurent.one(), {}, reduce=False)

    @classmethod
    def constant(cls, value: Scalar) -> "RationalFunction":
        return cls._raw(ExactLaurent.constant(value), {}, reduce=False)

    @classmethod
    def coerce(cls, value: Any) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        return cls._raw(ExactLaurent.coerce(value), {}, reduce=False)

    @classmethod
    def bracket_ratio(cls, numerator: Any, variable: Variable, m: int) -> "RationalFunction":
        """numerator / [m]_x for any nonzero integer m."""
        if m == 0:
            raise DenominatorZero("bracket [0] in a denominator")
        num = ExactLaurent.coerce(numerator)
        if m < 0:
            num, m = -num, -m
        return cls._raw(num, {Bracket(variable, m): 1})

    @classmethod
    def inverse_bracket(cls, variable: Variable, m: int) -> "RationalFunction":
        return cls.bracket_ratio(ExactLaurent.one(), variable, m)

    # -- inspection --------------------------------------------------------

    @property
    def denominator(self) -> Tuple[Bracket, ...]:
        """Denominator as a sorted multiset."""
        flat: List[Bracket] = []
        for bracket in sorted(self._den, key=lambda b: (b.variable.value, b.m)):
            flat.extend([bracket] * self._den[bracket])
        return tuple(flat)

    def denominator_counts(self) -> Dict[Bracket, int]:
        return dict(self._den)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __bool__(self) -> bool:
        return not self.numerator.is_zero()

    def is_laurent(self) -> bool:
        return not self._den

    # -- arithmetic --------------------------------------------------------

    def _scaled_numerators(self, other: "RationalFunction") -> Tuple[ExactLaurent, ExactLaurent, Dict[Bracket, int]]:
        if self._den == other._den:
            return self.numerator, other.numerator, dict(self._den)
        common = dict(self._den)
        for bracket, count in other._den.items():
            if count > common.get(bracket, 0):
                common[bracket] = count
        a = self.numerator
        b = other.numerator
        for bracket, count in common.items():
            missing_a = count - self._den.get(bracket, 0)
            missing_b = count - other._den.get(bracket, 0)
            if missing_a:
                a = a * bracket.laurent() ** missing_a
            if missing_b:
                b = b * bracket.laurent() ** missing_b
        return a, b, common

    def __add__(self, other: Any) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        if other.numerator.is_zero():
            return self
        if self.numerator.is_zero():
            return other
        a, b, common = self._scaled_numerators(other)
        return RationalFunction._raw(a + b, common)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.numerator, dict(self._den), reduce=False)

    def __sub__(self, other: Any) -> "RationalFunction":
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other: Any) -> "RationalFunction":
        return RationalFunction.coerce(other) + (-self)

    def __mul__(self, other: Any) -> "RationalFunction":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = RationalFunction.coerce(other)
        if self.numerator.is_zero() or other.numerator.is_zero():
            return RationalFunction.zero()
        den = dict(self._den)
        for bracket, count in other._den.items():
            den[bracket] = den.get(bracket, 0) + count
        return RationalFunction._raw(self.numerator * other.numerator, den)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "RationalFunction":
        factor = _as_fraction(factor)
        if not factor:
            return RationalFunction.zero()
        return RationalFunction._raw(self.numerator.scale(factor), dict(self._den), reduce=False)

    def __truediv__(self, other: Any) -> "RationalFunction":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise ZeroDivisionError("division of a rational function by zero")
            return self.scale(1 / _as_fraction(other))
        if isinstance(other, Bracket):
            return self.divide_bracket(other.variable, other.m)
        return NotImplemented

    def divide_bracket(self, variable: Variable, m: int) -> "RationalFunction":
        """self / [m]_x for any nonzero integer m."""
        return self * RationalFunction.inverse_bracket(variable, m)

    def shift(self, d_t: Scalar = 0, d_v: Scalar = 0) -> "RationalFunction":
        return RationalFunction._raw(self.numerator.shift(d_t, d_v), dict(self._den), reduce=False)

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            raise ValueError("only nonnegative powers are supported")
        result = RationalFunction.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, ExactLaurent)) and not isinstance(other, bool):
            other = RationalFunction.coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        a, b, _ = self._scaled_numerators(other)
        return a == b

    __hash__ = None  # type: ignore[assignment]

    # -- structural maps ---------------------------------------------------

    def adams(self, d: int) -> "RationalFunction":
        if d == 1:
            return self
        den = {Bracket(b.variable, b.m * d): c for b, c in self._den.items()}
        return RationalFunction._raw(self.numerator.adams(d), den, reduce=False)

    def invert_variable(self, variable: Variable) -> "RationalFunction":
        flips = sum(c for b, c in self._den.items() if b.variable is variable)
        num = self.numerator.invert_variable(variable)
        if flips % 2:
            num = -num
        return RationalFunction._raw(num, dict(self._den), reduce=False)

    def evaluate(self, t_half: Scalar, v_half: Scalar = 1) -> Fraction:
        t_half, v_half = _as_fraction(t_half), _as_fraction(v_half)
        denominator = _ONE
        for bracket, count in self._den.items():
            value = bracket.laurent().evaluate(t_half, v_half)
            if not value:
                raise DenominatorZero(f"{bracket} vanishes at t^(1/2)={t_half}, v^(1/2)={v_half}")
            denominator *= value**count
        return self.numerator.evaluate(t_half, v_half) / denominator

    def to_sympy(self, t_half_symbol: Any, v_half_symbol: Any) -> Any:
        expr = self.numerator.to_sympy(t_half_symbol, v_half_symbol)
        for bracket, count in self._den.items():
            expr = expr / bracket.laurent().to_sympy(t_half_symbol, v_half_symbol) ** count
        return expr

    def __str__(self) -> str:
        if not self._den:
            return str(self.numerator)
        den = "*".join(str(b) if c == 1 else f"{b}^{c}" for b, c in sorted(self._den.items(), key=lambda item: (item[0].variable.value, item[0].m)))
        return f"({self.numerator})/({den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


Coefficient = Union[ExactLaurent, RationalFunction]


def certify_polynomial(a: Coefficient) -> ExactLaurent:
    """The Laurent polynomial equal to a, or NotPolynomial."""
    if isinstance(a, ExactLaurent):
        return a
    if a.is_laurent():
        return a.numerator
    reduced = RationalFunction._raw(a.numerator, a.denominator_counts())
    if not reduced.is_laurent():
        raise NotPolynomial(f"not a Laurent polynomial: {reduced}")
    return reduced.numerator


@lru_cache(maxsize=None)
def _z_squared_power(g: int) -> ExactLaurent:
    base = ExactLaurent({(1, 0): 1, (0, 0): -2, (-1, 0): 1})
    return base**g


def zsquared_decompose(p: ExactLaurent) -> List[Fraction]:
    """
    Coefficients a_g with p = sum_g a_g z^{2g}, z^2 = t - 2 + t^{-1}.

    p must be univariate in t, palindromic, with integral exponents.
    """
    if p.involves(Variable.NU):
        raise ValueError(f"expected a polynomial in t only, got {p}")
    if not p.exponents_in(Variable.T, _ONE):
        raise NotPalindromic(f"non-integral t exponents in {p}")
    if not p.is_palindromic(Variable.T):
        raise NotPalindromic(f"not invariant under t -> 1/t: {p}")
    if p.is_zero():
        return []
    top = int(max(p.exponents(Variable.T)))
    coefficients = [_ZERO] * (top + 1)
    remaining = p
    for g in range(top, -1, -1):
        a = remaining.coefficient(g, 0)
        if a:
            coefficients[g] = a
            remaining = remaining - _z_squared_power(g).scale(a)
    if not remaining.is_zero():
        raise NotPalindromic(f"residue {remaining} after z^2 decomposition")
    return coefficients


def invert_variable(p: Coefficient, variable: Variable) -> Coefficient:
    return p.invert_variable(variable)


def is_palindromic(p: ExactLaurent, variable: Variable) -> bool:
    return p.is_palindromic(variable)


def adams(a: Coefficient, d: int) -> Coefficient:
    return a.adams(d)


def evaluate(a: Coefficient, t_half: Scalar, v_half: Scalar = 1) -> Fraction:
    return a.evaluate(t_half, v_half)


T_HALF = ExactLaurent.monomial(_HALF, 0)
V_HALF = ExactLaurent.monomial(0, _HALF)
