"""
Generating series, plethystic logarithm and the integrality checks built on it.

Two pipelines share one series type:

* the direct one keeps W(t, v) as rational functions and follows the
  definitions step by step (build_z, plethystic_log, fhat_from_f);
* the formal one strips the monomial v^{k(r-1)n/2} and lets v enter only
  through the principal power sums P_m = [m]_v/[m]_t, carried as an extra
  uncapped alphabet. Every coefficient is then a Laurent polynomial in t,
  and f, f-hat and the g-coefficients are read off by character
  orthogonality.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .combinatorics import Partition, PartitionTuple, add_partitions, degree_vectors_upto, mobius, partitions_of, stretch, tuples_of_degree
from .errors import NonLaurent, NotPalindromic, NotPolynomial, SizeMismatch
from .polyring import Coefficient, ExactLaurent, RationalFunction, bracket_laurent, certify_polynomial, zsquared_decompose
from .symchar import character
from .symfunc import S_on_k_points, inverse_neg_bracket_product, inverse_phi, m_matrix, m_matrix_inverse, principal_powersum, s_nu_on_k_points, schur_to_powersum
from .torus import TorusLinkSpec, colored_homfly_torus, powersum_form, sublink, v_prefactor_exponent
from .types import Variable

logger = logging.getLogger(__name__)

Key = Tuple[Partition, ...]
EMPTY = Partition(())


def _accumulate(target: Dict[Key, Coefficient], key: Key, value: Coefficient) -> None:
    existing = target.get(key)
    if existing is None:
        if value:
            target[key] = value
        return
    total = existing + value
    if total:
        target[key] = total
    else:
        del target[key]


@dataclass
class SymSeries:
    """
    Truncated series in the power sums of several alphabets.

    A key holds one partition per alphabet (the multi-index of p_tau); a cap
    of None leaves that alphabet untruncated.
    """

    caps: Tuple[Optional[int], ...]
    coefficients: Dict[Key, Coefficient] = field(default_factory=dict)

    def __post_init__(self):
        self.caps = tuple(self.caps)
        for cap in self.caps:
            if cap is not None and cap < 0:
                raise ValueError(f"caps must be nonnegative, got {self.caps}")

    @property
    def alphabets(self) -> int:
        return len(self.caps)

    def empty_key(self) -> Key:
        return tuple(EMPTY for _ in self.caps)

    def within_caps(self, key: Key) -> bool:
        return all(cap is None or p.size() <= cap for p, cap in zip(key, self.caps))

    def constant_term(self) -> Coefficient:
        return self.coefficients.get(self.empty_key(), 0)

    def items(self) -> Iterable[Tuple[Key, Coefficient]]:
        return self.coefficients.items()

    def _like(self, coefficients: Dict[Key, Coefficient]) -> "SymSeries":
        return SymSeries(self.caps, coefficients)

    def __add__(self, other: "SymSeries") -> "SymSeries":
        merged = dict(self.coefficients)
        for key, value in other.coefficients.items():
            _accumulate(merged, key, value)
        return self._like(merged)

    def scale(self, factor: Fraction) -> "SymSeries":
        return self._like({key: value.scale(factor) for key, value in self.coefficients.items()})

    def __mul__(self, other: "SymSeries") -> "SymSeries":
        product: Dict[Key, Coefficient] = {}
        for key_a, a in self.coefficients.items():
            for key_b, b in other.coefficients.items():
                key = tuple(add_partitions(x, y) for x, y in zip(key_a, key_b))
                if self.within_caps(key):
                    _accumulate(product, key, a * b)
        return self._like(product)

    def adams(self, d: int) -> "SymSeries":
        """p_m -> p_{dm} in every alphabet, coefficients t -> t^d, v -> v^d."""
        result: Dict[Key, Coefficient] = {}
        for key, value in self.coefficients.items():
            scaled = tuple(stretch(p, d) for p in key)
            if self.within_caps(scaled):
                _accumulate(result, scaled, value.adams(d))
        return self._like(result)

    def without_constant(self) -> "SymSeries":
        empty = self.empty_key()
        return self._like({key: value for key, value in self.coefficients.items() if key != empty})

    def restrict(self, degree: Sequence[int]) -> Dict[Key, Coefficient]:
        """Terms whose leading alphabets have exactly the given degrees."""
        m = len(degree)
        return {key: value for key, value in self.coefficients.items() if tuple(p.size() for p in key[:m]) == tuple(degree)}

    def equals(self, other: "SymSeries") -> bool:
        if set(self.coefficients) != set(other.coefficients):
            return False
        return all(self.coefficients[key] == other.coefficients[key] for key in self.coefficients)


@dataclass
class RefinedTable:
    """f or f-hat on one degree vector, keyed by partition tuple."""

    degree: Tuple[int, ...]
    entries: Dict[PartitionTuple, Coefficient]

    def __getitem__(self, colors: PartitionTuple) -> Coefficient:
        return self.entries.get(colors, RationalFunction.zero())

    def sorted_items(self) -> List[Tuple[PartitionTuple, Coefficient]]:
        return sorted(self.entries.items(), key=lambda item: [p.parts for p in item[0]], reverse=True)


@dataclass
class BpsTable:
    degree: Tuple[int, ...]
    entries: Dict[Tuple[PartitionTuple, int, Fraction], Fraction]
    parity: Dict[PartitionTuple, str]
    all_integer: bool
    q_parity_uniform: bool

    def witnesses(self) -> bool:
        return self.all_integer and self.q_parity_uniform

    def values(self, colors: PartitionTuple) -> Dict[Tuple[int, Fraction], Fraction]:
        return {(g, q): n for (c, g, q), n in self.entries.items() if c == colors}


@dataclass
class GTable:
    """g^lam_{colors}(u) for one degree vector; each u-polynomial is stored with u in the t slot."""

    link: TorusLinkSpec
    sizes: Tuple[int, ...]
    entries: Dict[PartitionTuple, Dict[Partition, ExactLaurent]]
    integral: bool
    palindromic: bool

    def entry(self, colors: PartitionTuple, lam: Partition) -> ExactLaurent:
        return self.entries.get(colors, {}).get(lam, ExactLaurent.zero())

    def nonzero(self) -> List[Tuple[PartitionTuple, Partition, ExactLaurent]]:
        rows = []
        for colors in sorted(self.entries, key=lambda c: [p.parts for p in c], reverse=True):
            for lam in sorted(self.entries[colors], key=lambda p: p.parts, reverse=True):
                rows.append((colors, lam, self.entries[colors][lam]))
        return rows


@dataclass
class Finding:
    """A conjecture-stage failure kept as a reproducible artifact."""

    link: TorusLinkSpec
    degree: Tuple[int, ...]
    stage: str
    message: str
    witness: Optional[str] = None


def _powersum_weights(colors: PartitionTuple) -> List[Tuple[Key, Fraction]]:
    """prod_i s_{lam^i}(x_i) = sum over multi-indices of weight * prod_i p_{tau^i}(x_i)."""
    weights: List[Tuple[Key, Fraction]] = [((), Fraction(1))]
    for entry in colors:
        expansion = schur_to_powersum(entry) if entry.parts else {EMPTY: Fraction(1)}
        weights = [(key + (tau,), w * c) for key, w in weights for tau, c in expansion.items()]
    return weights


def _check_caps(link: TorusLinkSpec, caps: Sequence[int]) -> Tuple[int, ...]:
    caps = tuple(int(c) for c in caps)
    if len(caps) != link.l:
        raise SizeMismatch(f"{link.name()} has {link.l} components but {len(caps)} caps were given")
    if any(c < 0 for c in caps):
        raise ValueError(f"caps must be nonnegative, got {caps}")
    return caps


def sublink_invariant(link: TorusLinkSpec, colors: PartitionTuple) -> RationalFunction:
    """W for a tuple with empty entries: the invariant of the sublink on the nonempty ones."""
    nonempty = colors.nonempty()
    if not nonempty:
        return RationalFunction.one()
    return colored_homfly_torus(sublink(link, len(nonempty)), PartitionTuple(nonempty)).value


def build_z(link: TorusLinkSpec, caps: Sequence[int]) -> SymSeries:
    """Z = sum W_{lam^1..lam^l} s_{lam^1}(x_1)...s_{lam^l}(x_l), truncated at caps."""
    caps = _check_caps(link, caps)
    series = SymSeries(caps, {tuple(EMPTY for _ in caps): RationalFunction.one()})
    for degree in degree_vectors_upto(caps):
        for colors in tuples_of_degree(degree):
            w = sublink_invariant(link, colors)
            for key, weight in _powersum_weights(colors):
                _accumulate(series.coefficients, key, w.scale(weight))
    return series


def build_formal_z(link: TorusLinkSpec, caps: Sequence[int]) -> SymSeries:
    """Z with v^{k(r-1)n/2} stripped; the last alphabet carries the principal power sums."""
    caps = _check_caps(link, caps)
    empty = tuple(EMPTY for _ in range(len(caps) + 1))
    series = SymSeries(caps + (None,), {empty: ExactLaurent.one()})
    for degree in degree_vectors_upto(caps):
        for colors in tuples_of_degree(degree):
            nonempty = colors.nonempty()
            weights_sigma = powersum_form(sublink(link, len(nonempty)), PartitionTuple(nonempty))
            for key, weight in _powersum_weights(colors):
                for sigma, w in weights_sigma.items():
                    _accumulate(series.coefficients, key + (sigma,), w.scale(weight))
    return series


def _log(z: SymSeries) -> SymSeries:
    if z.constant_term() != 1:
        raise ValueError("the series must have constant term 1")
    a = z.without_constant()
    result = SymSeries(z.caps)
    power = a
    j = 1
    while power.coefficients:
        result = result + power.scale(Fraction(1 if j % 2 else -1, j))
        power = power * a
        j += 1
    return result


def _exp(b: SymSeries, one: Coefficient) -> SymSeries:
    result = SymSeries(b.caps, {b.empty_key(): one})
    power = b
    j = 1
    while power.coefficients:
        result = result + power.scale(Fraction(1, factorial(j)))
        power = power * b
        j += 1
    return result


def _max_cap(series: SymSeries) -> int:
    return max((cap for cap in series.caps if cap is not None), default=0)


def plethystic_log(z: SymSeries) -> SymSeries:
    """F with log Z = sum_d (1/d) adams_d(F), by Mobius inversion."""
    logged = _log(z)
    result = SymSeries(z.caps)
    for d in range(1, _max_cap(z) + 1):
        mu = mobius(d)
        if mu:
            result = result + logged.adams(d).scale(Fraction(mu, d))
    return result


def plethystic_exp(f: SymSeries) -> SymSeries:
    """Inverse of plethystic_log: exp(sum_d (1/d) adams_d(F))."""
    one: Coefficient = RationalFunction.one()
    for value in f.coefficients.values():
        one = type(value).one()
        break
    total = SymSeries(f.caps)
    for d in range(1, _max_cap(f) + 1):
        total = total + f.adams(d).scale(Fraction(1, d))
    return _exp(total, one)


def _chi_product(colors: PartitionTuple, taus: Key) -> int:
    product = 1
    for lam, tau in zip(colors, taus):
        if lam.parts:
            product *= character(lam, tau)
            if not product:
                return 0
    return product


def reformulated_table(f_series: SymSeries, degree: Sequence[int]) -> RefinedTable:
    """f_{lam^1..lam^l} on one degree vector from the power-sum log series."""
    degree = tuple(degree)
    terms = f_series.restrict(degree)
    entries: Dict[PartitionTuple, Coefficient] = {}
    for colors in tuples_of_degree(degree):
        total = RationalFunction.zero()
        for key, value in terms.items():
            chi = _chi_product(colors, key)
            if chi:
                total = total + value.scale(chi)
        if total:
            entries[colors] = total
    return RefinedTable(degree=degree, entries=entries)


def _contract(table: RefinedTable, matrices: Dict[int, List[List[RationalFunction]]]) -> RefinedTable:
    # out[.., mu^i, ..] = sum_lam matrix_i[mu^i][lam^i] * in[.., lam^i, ..], one component at a time.

    current: Dict[PartitionTuple, RationalFunction] = {c: RationalFunction.coerce(v) for c, v in table.entries.items()}
    for i, n in enumerate(table.degree):
        if n == 0:
            continue
        parts = partitions_of(n)
        index = {p: j for j, p in enumerate(parts)}
        matrix = matrices[n]
        nxt: Dict[PartitionTuple, RationalFunction] = {}
        for colors, value in current.items():
            j = index[colors[i]]
            for row, mu in enumerate(parts):
                factor = matrix[row][j]
                if not factor:
                    continue
                target = PartitionTuple(colors.entries[:i] + (mu,) + colors.entries[i + 1 :])
                nxt[target] = nxt.get(target, RationalFunction.zero()) + value * factor
        current = {c: v for c, v in nxt.items() if v}
    return RefinedTable(degree=table.degree, entries=dict(current))


def fhat_from_f(f: RefinedTable) -> RefinedTable:
    """Solve f = sum f-hat * prod_i M_{lam^i mu^i} with the closed-form inverses."""
    return _contract(f, {n: m_matrix_inverse(n) for n in set(f.degree) if n})


def apply_m(fhat: RefinedTable) -> RefinedTable:
    return _contract(fhat, {n: m_matrix(n) for n in set(fhat.degree) if n})


def _q_parity(exponents: Iterable[Fraction]) -> str:
    kinds = {"integer" if q.denominator == 1 else "half-integer" for q in exponents}
    if not kinds:
        return "none"
    if len(kinds) > 1:
        return "mixed"
    return kinds.pop()


def extract_N(fhat: RefinedTable, l: int) -> BpsTable:  # noqa: E741  # pylint: disable=invalid-name
    """
    N_{mu,g,Q} from f-hat = sum N z^{2g+l-2} v^Q, z = t^{1/2} - t^{-1/2}.

    l counts the components the degree vector touches: an f-hat with zero
    entries belongs to the sublink on the nonzero ones.

    Raises NotPolynomial or NotPalindromic when the expansion does not exist.
    """
    z = bracket_laurent(Variable.T, 1)
    entries: Dict[Tuple[PartitionTuple, int, Fraction], Fraction] = {}
    parity: Dict[PartitionTuple, str] = {}
    for colors, value in fhat.sorted_items():
        scaled = RationalFunction.coerce(value)
        if l <= 2:
            scaled = scaled * RationalFunction.coerce(z ** (2 - l))
        else:
            for _ in range(l - 2):
                scaled = scaled.divide_bracket(Variable.T, 1)
        try:
            poly = certify_polynomial(scaled)
        except NotPolynomial as e:
            raise NotPolynomial(f"f-hat at {colors} times z^{2 - l} is not a Laurent polynomial: {scaled}") from e
        groups = poly.group_by(Variable.NU)
        for q in sorted(groups):
            for g, n in enumerate(zsquared_decompose(groups[q])):
                if n:
                    entries[(colors, g, q)] = n
        parity[colors] = _q_parity(groups)
    all_integer = all(n.denominator == 1 for n in entries.values())
    uniform = all(p != "mixed" for p in parity.values())
    return BpsTable(degree=fhat.degree, entries=entries, parity=parity, all_integer=all_integer, q_parity_uniform=uniform)


def global_q_parity(tables: Iterable[BpsTable]) -> str:
    exponents = [q for table in tables for (_, _, q) in table.entries]
    return _q_parity(exponents)


@dataclass
class FormalLog:
    """The formal log series of one link, with the readouts it supports."""

    link: TorusLinkSpec
    caps: Tuple[int, ...]
    series: SymSeries

    def _terms_by_sigma(self, degree: Tuple[int, ...]) -> Dict[Partition, Dict[Key, ExactLaurent]]:
        grouped: Dict[Partition, Dict[Key, ExactLaurent]] = {}
        for key, value in self.series.restrict(degree).items():
            grouped.setdefault(key[-1], {})[key[:-1]] = value
        return grouped

    def _prefactor(self, degree: Tuple[int, ...]) -> Fraction:
        return v_prefactor_exponent(self.link, sum(degree))

    def f_table(self, degree: Sequence[int]) -> RefinedTable:
        degree = tuple(degree)
        grouped = self._terms_by_sigma(degree)
        entries: Dict[PartitionTuple, Coefficient] = {}
        for colors in tuples_of_degree(degree):
            total = RationalFunction.zero()
            for sigma, terms in grouped.items():
                inner = ExactLaurent.zero()
                for taus, value in terms.items():
                    chi = _chi_product(colors, taus)
                    if chi:
                        inner = inner + value.scale(chi)
                if inner:
                    total = total + principal_powersum(sigma) * RationalFunction.coerce(inner)
            if total:
                entries[colors] = total.shift(0, self._prefactor(degree))
        return RefinedTable(degree=degree, entries=entries)

    def fhat_table(self, degree: Sequence[int]) -> RefinedTable:
        degree = tuple(degree)
        grouped = self._terms_by_sigma(degree)
        entries: Dict[PartitionTuple, Coefficient] = {}
        for colors in tuples_of_degree(degree):
            total = RationalFunction.zero()
            for sigma, terms in grouped.items():
                inner = RationalFunction.zero()
                for taus, value in terms.items():
                    chi = _chi_product(colors, taus)
                    if not chi:
                        continue
                    weight = RationalFunction.coerce(value.scale(chi))
                    for tau in taus:
                        if tau.parts:
                            weight = weight * inverse_phi(tau)
                    inner = inner + weight
                if inner:
                    total = total + principal_powersum(sigma) * inner
            if total:
                entries[colors] = total.shift(0, self._prefactor(degree))
        return RefinedTable(degree=degree, entries=entries)

    def g_coefficients(self, degree: Sequence[int]) -> Dict[PartitionTuple, Dict[Partition, RationalFunction]]:
        """
        G^lam_{mu} = [k]_t^2 sum_sigma chi^lam(sigma)/B_sigma sum_tau F[tau, sigma] prod_i chi^{mu^i}(tau^i)/B_{tau^i},

        with B_tau = prod_j (-[k tau_j]_t); G(t) = g(t^{-k}).
        """
        degree = tuple(degree)
        k = self.link.k
        rn = self.link.r * sum(degree)
        grouped = self._terms_by_sigma(degree)
        k_squared = RationalFunction.coerce(bracket_laurent(Variable.T, k) ** 2)
        result: Dict[PartitionTuple, Dict[Partition, RationalFunction]] = {}

        lams = partitions_of(rn)
        for colors in tuples_of_degree(degree):
            inner_by_sigma: Dict[Partition, RationalFunction] = {}
            for sigma, terms in grouped.items():
                inner = RationalFunction.zero()
                for taus, value in terms.items():
                    chi = _chi_product(colors, taus)
                    if not chi:
                        continue
                    weight = RationalFunction.coerce(value.scale(chi))
                    for tau in taus:
                        if tau.parts:
                            weight = weight * inverse_neg_bracket_product(tau, k)
                    inner = inner + weight
                if inner:
                    inner_by_sigma[sigma] = inner * inverse_neg_bracket_product(sigma, k)
            row: Dict[Partition, RationalFunction] = {}
            for lam in lams:
                total = RationalFunction.zero()
                for sigma, inner in inner_by_sigma.items():
                    chi = character(lam, sigma)
                    if chi:
                        total = total + inner.scale(chi)
                if total:
                    row[lam] = total * k_squared
            if row:
                result[colors] = row
        return result


def formal_log_series(link: TorusLinkSpec, caps: Sequence[int]) -> FormalLog:
    started = time.time()
    z = build_formal_z(link, caps)
    logger.info(f"Built formal Z for {link.name()} caps={tuple(caps)} ({len(z.coefficients)} terms) in {time.time() - started:.2f}s")
    started = time.time()
    series = plethystic_log(z)
    logger.info(f"Took formal plethystic log for {link.name()} in {time.time() - started:.2f}s")
    return FormalLog(link=link, caps=tuple(caps), series=series)


def t_to_u(g_t: ExactLaurent, k: int) -> ExactLaurent:
    """Rewrite G(t) = g(t^{-k}) as g(u); exponents land in the t slot."""
    return ExactLaurent({(-et / k, 0): c for (et, _), c in g_t.items()})


def u_to_t(g_u: ExactLaurent, k: int) -> ExactLaurent:
    return ExactLaurent({(-eu * k, 0): c for (eu, _), c in g_u.items()})


def _gtable_from_log(log: FormalLog, sizes: Tuple[int, ...]) -> GTable:
    started = time.time()
    k = log.link.k
    entries: Dict[PartitionTuple, Dict[Partition, ExactLaurent]] = {}
    integral = True
    palindromic = True
    for colors, row in log.g_coefficients(sizes).items():
        converted: Dict[Partition, ExactLaurent] = {}
        for lam, value in row.items():
            try:
                g_t = certify_polynomial(value)
            except NotPolynomial as e:
                raise NonLaurent(f"g^{lam.label()}_{colors} is not a Laurent polynomial: {value}") from e
            g_u = t_to_u(g_t, k)
            if not (g_u.has_integral_coefficients() and g_u.exponents_in(Variable.T, Fraction(1))):
                integral = False
            if not g_u.is_palindromic(Variable.T):
                palindromic = False
            converted[lam] = g_u
        entries[colors] = converted
    logger.info(f"Extracted g for {log.link.name()} sizes={sizes} in {time.time() - started:.2f}s")
    return GTable(link=log.link, sizes=sizes, entries=entries, integral=integral, palindromic=palindromic)


def extract_g(link: TorusLinkSpec, sizes: Sequence[int]) -> GTable:
    sizes = _check_caps(link, sizes)
    if not any(sizes):
        raise ValueError("at least one size must be positive")
    return _gtable_from_log(formal_log_series(link, sizes), sizes)


@dataclass
class GTableRun:
    link: TorusLinkSpec
    tables: List[GTable]
    findings: List[Finding]


def g_table(link: TorusLinkSpec, max_sizes: Sequence[int], jobs: int = 1) -> GTableRun:
    """Every nonzero degree vector <= max_sizes, from a single log series."""
    max_sizes = _check_caps(link, max_sizes)
    log = formal_log_series(link, max_sizes)
    degrees = degree_vectors_upto(max_sizes)

    def work(degree: Tuple[int, ...]):
        try:
            return _gtable_from_log(log, degree), None
        except NonLaurent as e:
            logger.warning(f"g extraction failed for {link.name()} sizes={degree}: {e}")
            return None, Finding(link=link, degree=degree, stage="extract_g", message=str(e))

    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        outcomes = list(pool.map(work, degrees))
    tables = [table for table, _ in outcomes if table is not None]
    findings = [finding for _, finding in outcomes if finding is not None]
    return GTableRun(link=link, tables=tables, findings=findings)


def fhat_from_g(table: GTable, mus: Optional[Iterable[PartitionTuple]] = None) -> RefinedTable:
    """
    f-hat_mu = (-[1]_t)^l [k]_t^{-2} v^{k(r-1)n/2} sum_lam prod_i S_{lam^i,mu^i} sum_lam G^lam s_{lam;v^{-1/2}},

    with S and s evaluated on the k-point alphabet t^{(k-1)/2}, ..., t^{-(k-1)/2}.
    """
    link = table.link
    k = link.k
    prefactor = RationalFunction.coerce((-bracket_laurent(Variable.T, 1)) ** link.l)
    prefactor = prefactor * RationalFunction.inverse_bracket(Variable.T, k) * RationalFunction.inverse_bracket(Variable.T, k)
    inner_sums: Dict[PartitionTuple, RationalFunction] = {}
    for colors, row in table.entries.items():
        total = RationalFunction.zero()
        for lam, g_u in row.items():
            total = total + s_nu_on_k_points(lam, k) * RationalFunction.coerce(u_to_t(g_u, k))
        inner_sums[colors] = total
    entries: Dict[PartitionTuple, Coefficient] = {}
    for mu in mus if mus is not None else tuples_of_degree(table.sizes):
        total = RationalFunction.zero()
        for colors, inner in inner_sums.items():
            weight = RationalFunction.one()
            for lam_i, mu_i in zip(colors, mu):
                if lam_i.parts:
                    weight = weight * S_on_k_points(lam_i, mu_i, k)
            total = total + weight * inner
        if total:
            entries[mu] = (total * prefactor).shift(0, v_prefactor_exponent(link, sum(table.sizes)))
    return RefinedTable(degree=table.sizes, entries=entries)


def tables_agree(a: RefinedTable, b: RefinedTable) -> bool:
    keys = set(a.entries) | set(b.entries)
    return all(RationalFunction.coerce(a[key]) == RationalFunction.coerce(b[key]) for key in keys)


def fhat_vs_g_consistency(link: TorusLinkSpec, sizes: Sequence[int], table: Optional[GTable] = None) -> bool:
    """Rebuild f-hat from the g-coefficients and compare with the direct pipeline."""
    sizes = _check_caps(link, sizes)
    if table is None:
        table = extract_g(link, sizes)
    direct = fhat_from_f(reformulated_table(plethystic_log(build_z(link, sizes)), sizes))
    return tables_agree(fhat_from_g(table), direct)


def fhat_closed_form_T2k(mu: Partition, k: int) -> RationalFunction:  # pylint: disable=invalid-name
    """
    f-hat_(2) and f-hat_(1,1) of the (2, k) torus knot:

        -v^k [1]_v^2 (v + 1/v - t - 1/t) [k+1][k][k-1]^2 / ([3][2]^3[1])    for (2),
        -v^k [1]_v^2 (v + 1/v - t - 1/t) [k+1]^2[k][k-1] / ([3][2]^3[1])    for (1,1),

    brackets in t.
    """
    if k % 2 == 0:
        raise ValueError(f"k must be odd, got {k}")
    if mu == Partition((2,)):
        powers = {k + 1: 1, k: 1, k - 1: 2}
    elif mu == Partition((1, 1)):
        powers = {k + 1: 2, k: 1, k - 1: 1}
    else:
        raise ValueError(f"closed form only for (2) and (1,1), got {mu.label()}")
    numerator = -(bracket_laurent(Variable.NU, 1) ** 2) * ExactLaurent({(0, 1): 1, (0, -1): 1, (1, 0): -1, (-1, 0): -1})
    for m, power in powers.items():
        numerator = numerator * bracket_laurent(Variable.T, m) ** power
    value = RationalFunction(numerator, {}).shift(0, k)
    for m, power in ((3, 1), (2, 3), (1, 1)):
        for _ in range(power):
            value = value.divide_bracket(Variable.T, m)
    return value


@dataclass
class DegreeResult:
    degree: Tuple[int, ...]
    f: RefinedTable
    fhat: RefinedTable
    bps: Optional[BpsTable]
    finding: Optional[Finding]


@dataclass
class LmvRun:
    link: TorusLinkSpec
    caps: Tuple[int, ...]
    degrees: List[DegreeResult]

    @property
    def findings(self) -> List[Finding]:
        return [result.finding for result in self.degrees if result.finding is not None]

    def global_parity(self) -> str:
        return global_q_parity(result.bps for result in self.degrees if result.bps is not None)

    def passed(self) -> bool:
        return not self.findings and all(result.bps is not None and result.bps.witnesses() for result in self.degrees)


def _perturb(fhat: RefinedTable) -> RefinedTable:
    # Adds 1/[2]_t to the first entry so that the integrality stage must fail.
    items = fhat.sorted_items()
    if not items:
        return fhat
    colors, value = items[0]
    entries = dict(fhat.entries)
    entries[colors] = RationalFunction.coerce(value) + RationalFunction.inverse_bracket(Variable.T, 2)
    return RefinedTable(degree=fhat.degree, entries=entries)


def active_components(degree: Sequence[int]) -> int:
    return sum(1 for n in degree if n)


def analyze_degree(link: TorusLinkSpec, f_series: SymSeries, degree: Tuple[int, ...], inject_fault: bool = False) -> DegreeResult:
    f = reformulated_table(f_series, degree)
    fhat = fhat_from_f(f)
    if inject_fault:
        fhat = _perturb(fhat)
    try:
        bps = extract_N(fhat, active_components(degree))
    except (NotPolynomial, NotPalindromic) as e:
        stage = "certify_polynomial" if isinstance(e, NotPolynomial) else "zsquared_decompose"
        logger.warning(f"Integrality finding for {link.name()} degree={degree}: {e}")
        witness = str(fhat.sorted_items()[0][1]) if fhat.entries else None
        return DegreeResult(degree=degree, f=f, fhat=fhat, bps=None, finding=Finding(link=link, degree=degree, stage=stage, message=str(e), witness=witness))
    finding = None
    if not bps.witnesses():
        finding = Finding(link=link, degree=degree, stage="extract_N", message=f"all_integer={bps.all_integer} q_parity_uniform={bps.q_parity_uniform}")
        logger.warning(f"Integrality finding for {link.name()} degree={degree}: {finding.message}")
    return DegreeResult(degree=degree, f=f, fhat=fhat, bps=bps, finding=finding)


def run_lmv(link: TorusLinkSpec, caps: Sequence[int], jobs: int = 1, inject_fault: bool = False) -> LmvRun:
    caps = _check_caps(link, caps)
    started = time.time()
    z = build_z(link, caps)
    logger.info(f"Built Z for {link.name()} caps={caps} ({len(z.coefficients)} terms) in {time.time() - started:.2f}s")
    started = time.time()
    f_series = plethystic_log(z)
    logger.info(f"Took plethystic log for {link.name()} in {time.time() - started:.2f}s")
    degrees = degree_vectors_upto(caps)
    first = degrees[0] if degrees else None

    def work(degree: Tuple[int, ...]) -> DegreeResult:
        return analyze_degree(link, f_series, degree, inject_fault=inject_fault and degree == first)

    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        results = list(pool.map(work, degrees))
    return LmvRun(link=link, caps=caps, degrees=results)
