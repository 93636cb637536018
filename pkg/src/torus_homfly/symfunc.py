"""
Symmetric-function transforms, all done through the Frobenius formula.

q-brackets are rewritten in t with t^{1/2} = q^{-1}, so q^m - q^{-m} = -[m]_t,
and principal power sums with v^{1/2} = q^{-N} become [m]_v/[m]_t.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

import sympy
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .combinatorics import Partition, PartitionTuple, add_partitions, hooks_contents, partitions_of, stretch, z_value
from .errors import SingularSystem
from .polyring import ExactLaurent, RationalFunction, bracket_laurent
from .symchar import character, character_table
from .types import Variable

logger = logging.getLogger(__name__)

Matrix = List[List[RationalFunction]]


@dataclass
class SchurVector:
    degree: int
    coefficients: Dict[Partition, object] = field(default_factory=dict)

    def __getitem__(self, lam: Partition):
        return self.coefficients.get(lam, 0)

    def items(self) -> Iterator[Tuple[Partition, object]]:
        return iter(self.coefficients.items())

    def nonzero(self) -> Dict[Partition, object]:
        return {lam: c for lam, c in self.coefficients.items() if c}


@dataclass(frozen=True)
class LRTable:
    inputs: Tuple[Partition, ...]
    r: int
    coefficients: Tuple[Tuple[Partition, int], ...]

    def as_dict(self) -> Dict[Partition, int]:
        return dict(self.coefficients)

    def __getitem__(self, lam: Partition) -> int:
        return self.as_dict().get(lam, 0)


def powersum_to_schur(mu: Partition) -> SchurVector:
    """p_mu = sum_lam chi^lam(mu) s_lam."""
    n = mu.size()
    table = character_table(n)
    column = table.column(mu)
    return SchurVector(degree=n, coefficients={lam: column[i] for i, lam in enumerate(table.partitions) if column[i]})


def schur_to_powersum(lam: Partition) -> Dict[Partition, Fraction]:
    """s_lam = sum_mu chi^lam(mu)/z_mu p_mu."""
    table = character_table(lam.size())
    row = table.row(lam)
    return {mu: Fraction(row[j], z_value(mu)) for j, mu in enumerate(table.partitions) if row[j]}


@lru_cache(maxsize=None)
def _combined_class_weights(inputs: Tuple[Partition, ...]) -> Tuple[Tuple[Partition, Fraction], ...]:
    # prod_i s_{lam^i} = sum over combined cycle types nu of weight(nu) * p_nu.
    weights: Dict[Partition, Fraction] = {Partition(()): Fraction(1)}
    for lam in inputs:
        expansion = schur_to_powersum(lam)
        merged: Dict[Partition, Fraction] = {}
        for nu, w in weights.items():
            for mu, c in expansion.items():
                key = add_partitions(nu, mu)
                merged[key] = merged.get(key, Fraction(0)) + w * c
        weights = {nu: w for nu, w in merged.items() if w}
    return tuple(sorted(weights.items(), key=lambda item: item[0].parts, reverse=True))


@lru_cache(maxsize=None)
def _stretched_lr_cached(inputs: Tuple[Partition, ...], r: int) -> LRTable:
    n = r * sum(lam.size() for lam in inputs)
    table = character_table(n)
    totals = [Fraction(0)] * len(table.partitions)
    for nu, weight in _combined_class_weights(inputs):
        j = table.index(stretch(nu, r))
        for i in range(len(table.partitions)):
            value = table.values[i][j]
            if value:
                totals[i] += weight * value
    coefficients = []
    for lam, total in zip(table.partitions, totals):
        if total.denominator != 1:
            raise ArithmeticError(f"non-integral stretched coefficient {total} at {lam.label()}")
        if total:
            coefficients.append((lam, int(total)))
    return LRTable(inputs=inputs, r=r, coefficients=tuple(coefficients))


def stretched_lr(colors: PartitionTuple, r: int) -> LRTable:
    """Integers c^lam with prod_i s_{lam^i}(x^r) = sum_lam c^lam s_lam(x)."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    return _stretched_lr_cached(tuple(colors.entries), r)


def principal_powersum(sigma: Partition) -> RationalFunction:
    """p_sigma at the principal specialization: prod_j [sigma_j]_v/[sigma_j]_t."""
    numerator = ExactLaurent.one()
    den = []
    for part in sigma.parts:
        numerator = numerator * bracket_laurent(Variable.NU, part)
        den.append((Variable.T, part))
    return RationalFunction(numerator, den)


@lru_cache(maxsize=None)
def s_star(lam: Partition) -> RationalFunction:
    """Principal specialization of s_lam by the Frobenius sum."""
    total = RationalFunction.zero()
    for mu, weight in schur_to_powersum(lam).items():
        total = total + principal_powersum(mu).scale(weight)
    return total


@lru_cache(maxsize=None)
def s_star_hook(lam: Partition) -> RationalFunction:
    """prod over cells of (v^{1/2} t^{c/2} - v^{-1/2} t^{-c/2}) / [h]_t."""
    numerator = ExactLaurent.one()
    den = []
    for hook, content in hooks_contents(lam):
        half = Fraction(content, 2)
        factor = ExactLaurent({(half, Fraction(1, 2)): 1, (-half, Fraction(-1, 2)): -1})
        numerator = numerator * factor
        den.append((Variable.T, hook))
    return RationalFunction(numerator, den)


def phi(tau: Partition) -> RationalFunction:
    """prod_j (-[tau_j]_t) / (-[1]_t)."""
    numerator = ExactLaurent.one()
    for part in tau.parts:
        numerator = numerator * (-bracket_laurent(Variable.T, part))
    return RationalFunction.bracket_ratio(-numerator, Variable.T, 1)


def inverse_phi(tau: Partition) -> RationalFunction:
    """1/phi_tau = -[1]_t / prod_j (-[tau_j]_t)."""
    den = [(Variable.T, part) for part in tau.parts]
    sign = -1 if (len(tau.parts) + 1) % 2 else 1
    return RationalFunction(bracket_laurent(Variable.T, 1).scale(sign), den)


def _class_sum_matrix(n: int, weight) -> Matrix:
    table = character_table(n)
    size = len(table.partitions)
    weights = [weight(tau) for tau in table.partitions]
    matrix: Matrix = []
    for i in range(size):
        row = []
        for j in range(size):
            entry = RationalFunction.zero()
            for c, tau in enumerate(table.partitions):
                product = table.values[i][c] * table.values[j][c]
                if product:
                    entry = entry + weights[c].scale(Fraction(product, z_value(tau)))
            row.append(entry)
        matrix.append(row)
    return matrix


@lru_cache(maxsize=None)
def _m_matrix_cached(n: int) -> Tuple[Tuple[RationalFunction, ...], ...]:
    return tuple(tuple(row) for row in _class_sum_matrix(n, phi))


@lru_cache(maxsize=None)
def _m_matrix_inverse_cached(n: int) -> Tuple[Tuple[RationalFunction, ...], ...]:
    return tuple(tuple(row) for row in _class_sum_matrix(n, inverse_phi))


def m_matrix(n: int) -> Matrix:
    """M_{lam,mu}(t) = sum_tau chi^lam(tau) chi^mu(tau) phi_tau / z_tau, canonical order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return [list(row) for row in _m_matrix_cached(n)]


def m_matrix_inverse(n: int) -> Matrix:
    """Closed form of M^{-1}: the same class sum with 1/phi_tau."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return [list(row) for row in _m_matrix_inverse_cached(n)]


def matrix_product(a: Matrix, b: Matrix) -> Matrix:
    size = len(b[0]) if b else 0
    result = []
    for row in a:
        out = []
        for j in range(size):
            entry = RationalFunction.zero()
            for i, x in enumerate(row):
                if x and b[i][j]:
                    entry = entry + x * b[i][j]
            out.append(entry)
        result.append(out)
    return result


def verify_m_inverse(n: int) -> bool:
    """Invert M(n) by elimination over Q(t^{1/2}) with sympy and compare to the closed form."""
    s, w = sympy.symbols("s w")
    size = len(partitions_of(n))
    rows = [[entry.to_sympy(s, w) for entry in row] for row in m_matrix(n)]
    try:
        eliminated = DomainMatrix.from_list_sympy(size, size, rows).to_field().inv().to_Matrix()
    except DMNonInvertibleMatrixError as e:
        raise SingularSystem(f"M({n}) is singular over Q(t^(1/2))") from e
    closed = m_matrix_inverse(n)
    for i in range(size):
        for j in range(size):
            if sympy.cancel(eliminated[i, j] - closed[i][j].to_sympy(s, w)) != 0:
                logger.warning(f"M({n}) inverse mismatch at ({i}, {j})")
                return False
    return True


def _neg_bracket_product(tau: Partition, k: int) -> ExactLaurent:
    """prod_j (q^{k tau_j} - q^{-k tau_j}) = prod_j (-[k tau_j]_t)."""
    product = ExactLaurent.one()
    for part in tau.parts:
        product = product * (-bracket_laurent(Variable.T, k * part))
    return product


@lru_cache(maxsize=None)
def _s_q_laurent(mu: Partition, k: int) -> Tuple[Tuple[Partition, ExactLaurent], ...]:
    table = character_table(mu.size())
    j_mu = table.index(mu)
    entries = []
    for i, lam in enumerate(table.partitions):
        total = ExactLaurent.zero()
        for c, tau in enumerate(table.partitions):
            product = table.values[i][c] * table.values[j_mu][c]
            if product:
                total = total + _neg_bracket_product(tau, k).scale(Fraction(product, z_value(tau)))
        entries.append((lam, total))
    return tuple(entries)


def s_q_laurent(mu: Partition, k: int) -> Dict[Partition, ExactLaurent]:
    """Schur coefficients of s_{mu;q^k}; they are Laurent polynomials in t."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return dict(_s_q_laurent(mu, k))


def s_q_vector(mu: Partition, k: int) -> SchurVector:
    """s_{mu;q^k} = sum_lam (q^k - q^{-k}) M_{lam,mu}(q^{-2k}) s_lam."""
    return SchurVector(degree=mu.size(), coefficients={lam: RationalFunction.coerce(c) for lam, c in s_q_laurent(mu, k).items()})


def s_mu_q_powersum(mu: Partition, k: int) -> Dict[Partition, RationalFunction]:
    """s_{mu;q^k} = sum_tau chi^mu(tau)/z_tau prod_j (q^{k tau_j} - q^{-k tau_j}) p_tau."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    result = {}
    for tau, weight in schur_to_powersum(mu).items():
        result[tau] = RationalFunction.coerce(_neg_bracket_product(tau, k).scale(weight))
    return result


@lru_cache(maxsize=None)
def principal_specialize_sq(lam: Partition, k: int) -> RationalFunction:
    """s_{lam;q^k}(q^{N-1}, q^{N-3}, ..., q^{1-N}) with v^{1/2} = q^{-N}."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    total = RationalFunction.zero()
    for sigma, weight in schur_to_powersum(lam).items():
        total = total + principal_powersum(sigma) * RationalFunction.coerce(_neg_bracket_product(sigma, k).scale(weight))
    return total


def k_point_powersum(tau: Partition, k: int) -> RationalFunction:
    """p_tau on the alphabet t^{(k-1)/2}, ..., t^{-(k-1)/2}: prod_j [k tau_j]_t/[tau_j]_t."""
    numerator = ExactLaurent.one()
    den = []
    for part in tau.parts:
        numerator = numerator * bracket_laurent(Variable.T, k * part)
        den.append((Variable.T, part))
    return RationalFunction(numerator, den)


def inverse_neg_bracket_product(tau: Partition, k: int) -> RationalFunction:
    """1 / prod_j (-[k tau_j]_t)."""
    result = RationalFunction.one()
    for part in tau.parts:
        result = result * RationalFunction.inverse_bracket(Variable.T, -k * part)
    return result


@lru_cache(maxsize=None)
def S_on_k_points(lam: Partition, mu: Partition, k: int) -> RationalFunction:  # pylint: disable=invalid-name
    """S_{lam,mu} = sum_tau chi^lam(tau) chi^mu(tau)/z_tau p_tau on the k-point alphabet."""
    total = RationalFunction.zero()
    for tau in partitions_of(lam.size()):
        product = character(lam, tau) * character(mu, tau)
        if product:
            total = total + k_point_powersum(tau, k).scale(Fraction(product, z_value(tau)))
    return total


@lru_cache(maxsize=None)
def s_nu_on_k_points(lam: Partition, k: int) -> RationalFunction:
    """s_{lam;v^{-1/2}} on the k-point alphabet."""
    total = RationalFunction.zero()
    for sigma, weight in schur_to_powersum(lam).items():
        factor = ExactLaurent.one()
        for part in sigma.parts:
            factor = factor * (-bracket_laurent(Variable.NU, part))
        total = total + k_point_powersum(sigma, k) * RationalFunction.coerce(factor.scale(weight))
    return total


def k_point_powersum_value(m: int, k: int, q: Fraction) -> Fraction:
    """sum_i x_i^m over x = q^{k-1}, q^{k-3}, ..., q^{1-k}."""
    q = Fraction(q)
    return sum((q ** (m * (k - 1 - 2 * i)) for i in range(k)), Fraction(0))
