"""
Exact matrix models of Hecke-algebra irreducibles, used to re-derive the torus
invariants from braids.

Conventions: q = t^{-1/2}, generators satisfy (g - q)(g + q^{-1}) = 0, so
g^{-1} = g + [1]_t. Matrices act on the seminormal basis indexed by standard
tableaux (row words); entries are RationalFunctions in t.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .combinatorics import Partition, PartitionTuple, addable_contents, dimension, kappa, partitions_of, row_word_contents, standard_tableaux, superstandard_word, tuples_of_degree
from .errors import SizeMismatch, SpectralCollision
from .polyring import ExactLaurent, RationalFunction, bracket_laurent
from .symfunc import s_star_hook, stretched_lr
from .torus import ColoredInvariant, TorusLinkSpec
from .types import Variable

logger = logging.getLogger(__name__)

Matrix = List[List[RationalFunction]]

ONE = RationalFunction.one()
ZERO = RationalFunction.zero()


def _monomial(e_t: Fraction) -> RationalFunction:
    return RationalFunction.coerce(ExactLaurent.monomial(e_t, 0))


Q = _monomial(Fraction(-1, 2))
NEG_Q_INV = _monomial(Fraction(1, 2)).scale(-1)
BRACKET_ONE = RationalFunction.coerce(bracket_laurent(Variable.T, 1))
NEG_BRACKET_ONE = BRACKET_ONE.scale(-1)


@dataclass(frozen=True)
class BraidWord:
    """Signed generator indices: +i is sigma_i, -i its inverse."""

    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            raise TypeError("BraidWord letters must be a tuple of ints.")
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise ValueError(f"letter {letter} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise SizeMismatch(f"cannot compose braids on {self.strands} and {other.strands} strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def power(self, exponent: int) -> "BraidWord":
        if exponent < 0:
            return self.inverse().power(-exponent)
        return BraidWord(self.strands, self.letters * exponent)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-letter for letter in reversed(self.letters)))

    def positions(self) -> List[List[int]]:
        """Strand occupying each position before each letter, and after the last."""
        current = list(range(self.strands))
        history = [list(current)]
        for letter in self.letters:
            i = abs(letter) - 1
            current[i], current[i + 1] = current[i + 1], current[i]
            history.append(list(current))
        return history

    def permutation(self) -> List[int]:
        """permutation[s] = final position of the strand starting at position s."""
        final = self.positions()[-1]
        result = [0] * self.strands
        for position, strand in enumerate(final):
            result[strand] = position
        return result

    def components(self) -> List[int]:
        """Component index of every starting strand; components numbered by smallest strand."""
        perm = self.permutation()
        label = [-1] * self.strands
        count = 0
        for start in range(self.strands):
            if label[start] >= 0:
                continue
            s = start
            while label[s] < 0:
                label[s] = count
                s = perm[s]
            count += 1
        return label

    def component_writhes(self, labels: Optional[Sequence[int]] = None) -> Dict[int, int]:
        """Signed self-crossings per component, strands labeled by starting position."""
        labels = list(labels) if labels is not None else self.components()
        writhes: Dict[int, int] = {c: 0 for c in labels}
        current = list(range(self.strands))
        for letter in self.letters:
            i = abs(letter) - 1
            a, b = labels[current[i]], labels[current[i + 1]]
            if a == b:
                writhes[a] += 1 if letter > 0 else -1
            current[i], current[i + 1] = current[i + 1], current[i]
        return writhes


def full_twist(n: int) -> BraidWord:
    """Delta_n^2 = (sigma_1 ... sigma_{n-1})^n."""
    return BraidWord(n, tuple(range(1, n)) * n)


def torus_braid(link: TorusLinkSpec) -> BraidWord:
    """(sigma_1 ... sigma_{rl-1})^{kl}; its closure is T(rl, kl)."""
    n = link.strands
    delta = BraidWord(n, tuple(range(1, n)))
    return delta.power(link.k * link.l)


def _crossing_word(offset: int, a: int, b: int) -> List[int]:
    # An a-strand cable crossing over a b-strand cable to its right.
    letters = []
    for j in range(b):
        letters.extend(range(offset + a + j, offset + j, -1))
    return letters


@dataclass(frozen=True)
class CabledBraid:
    word: BraidWord
    block_sizes: Tuple[int, ...]
    strand_labels: Tuple[int, ...]

    def block_offsets(self) -> List[int]:
        offsets = []
        total = 0
        for size in self.block_sizes:
            offsets.append(total)
            total += size
        return offsets


def cable(word: BraidWord, sizes: Sequence[int], labels: Optional[Sequence[int]] = None) -> CabledBraid:
    """
    Replace the strand starting at position p by sizes[p] parallel strands.

    labels[p] names the component of strand p; every cabled strand inherits it.
    """
    if len(sizes) != word.strands:
        raise SizeMismatch(f"{len(sizes)} block sizes for {word.strands} strands")
    if any(size < 1 for size in sizes):
        raise ValueError(f"block sizes must be positive, got {tuple(sizes)}")
    labels = list(labels) if labels is not None else word.components()
    current = list(range(word.strands))
    letters: List[int] = []
    for letter in word.letters:
        i = abs(letter) - 1
        offset = sum(sizes[current[p]] for p in range(i))
        left, right = sizes[current[i]], sizes[current[i + 1]]
        if letter > 0:
            letters.extend(_crossing_word(offset, left, right))
        else:
            letters.extend(-x for x in reversed(_crossing_word(offset, right, left)))
        current[i], current[i + 1] = current[i + 1], current[i]
    total = sum(sizes)
    strand_labels = tuple(labels[p] for p in range(word.strands) for _ in range(sizes[p]))
    return CabledBraid(word=BraidWord(total, tuple(letters)), block_sizes=tuple(sizes), strand_labels=strand_labels)


def identity_matrix(d: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(d)] for i in range(d)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    d = len(b[0]) if b else 0
    result = []
    for row in a:
        out = [ZERO] * d
        for s, x in enumerate(row):
            if not x:
                continue
            for j, y in enumerate(b[s]):
                if y:
                    out[j] = out[j] + x * y
        result.append(out)
    return result


def trace(a: Matrix) -> RationalFunction:
    total = ZERO
    for i, row in enumerate(a):
        total = total + row[i]
    return total


def matrices_equal(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def scalar_matrix(value: RationalFunction, d: int) -> Matrix:
    return [[value if i == j else ZERO for j in range(d)] for i in range(d)]


@dataclass
class HeckeIrrep:
    """
    Seminormal representation of H_n(q) on S^lam.

    Generator i sends v_T to diag[i][T] v_T + off[i][T] v_{s_i T}; partner is
    -1 when s_i T is not standard.
    """

    lam: Partition
    tableaux: Tuple[Tuple[int, ...], ...]
    diag: List[List[RationalFunction]]
    partner: List[List[int]]
    off: List[List[RationalFunction]]

    @property
    def n(self) -> int:
        return self.lam.size()

    @property
    def dimension(self) -> int:
        return len(self.tableaux)

    def generator_matrix(self, letter: int) -> Matrix:
        return self.right_apply(identity_matrix(self.dimension), letter)

    def right_apply(self, x: Matrix, letter: int) -> Matrix:
        """x * rho(g_i^{+-1})."""
        i = abs(letter) - 1
        diag = self.diag[i]
        if letter < 0:
            diag = [entry + BRACKET_ONE for entry in diag]
        partner, off = self.partner[i], self.off[i]
        result = []
        for row in x:
            out = []
            for c in range(self.dimension):
                entry = row[c] * diag[c] if row[c] else ZERO
                p = partner[c]
                if p >= 0 and row[p]:
                    entry = entry + row[p] * off[c]
                out.append(entry)
            result.append(out)
        return result

    def left_apply(self, x: Matrix, letter: int) -> Matrix:
        """rho(g_i^{+-1}) * x."""
        i = abs(letter) - 1
        diag = self.diag[i]
        if letter < 0:
            diag = [entry + BRACKET_ONE for entry in diag]
        partner, off = self.partner[i], self.off[i]
        result = []
        for r in range(self.dimension):
            out = [row_entry * diag[r] if row_entry else ZERO for row_entry in x[r]]
            p = partner[r]
            if p >= 0:
                out = [entry + y * off[p] if y else entry for entry, y in zip(out, x[p])]
            result.append(out)
        return result

    def word_matrix(self, word: BraidWord, start: Optional[Matrix] = None) -> Matrix:
        if word.strands != self.n:
            raise SizeMismatch(f"braid on {word.strands} strands against irrep of H_{self.n}")
        x = start if start is not None else identity_matrix(self.dimension)
        for letter in word.letters:
            x = self.right_apply(x, letter)
        return x


def _swap_coefficient(d: int) -> Tuple[RationalFunction, RationalFunction]:
    """(a(d), off(d)) for content difference d = c(i+1) - c(i), |d| >= 2."""
    a = RationalFunction.bracket_ratio(bracket_laurent(Variable.T, 1).shift(Fraction(-d, 2), 0), Variable.T, d)
    if d < 0:
        return a, ONE
    numerator = bracket_laurent(Variable.T, d - 1) * bracket_laurent(Variable.T, d + 1)
    return a, RationalFunction(numerator, {(Variable.T, d): 2})


@lru_cache(maxsize=None)
def seminormal_irrep(lam: Partition) -> HeckeIrrep:
    tableaux = standard_tableaux(lam)
    index = {word: i for i, word in enumerate(tableaux)}
    contents = [row_word_contents(word) for word in tableaux]
    diag: List[List[RationalFunction]] = []
    partner: List[List[int]] = []
    off: List[List[RationalFunction]] = []
    for j in range(lam.size() - 1):
        d_row, p_row, o_row = [], [], []
        for t_index, word in enumerate(tableaux):
            d = contents[t_index][j + 1] - contents[t_index][j]
            if d == 1:
                d_row.append(Q)
                p_row.append(-1)
                o_row.append(ZERO)
            elif d == -1:
                d_row.append(NEG_Q_INV)
                p_row.append(-1)
                o_row.append(ZERO)
            else:
                swapped = word[:j] + (word[j + 1], word[j]) + word[j + 2 :]
                a, o = _swap_coefficient(d)
                d_row.append(a)
                p_row.append(index[swapped])
                o_row.append(o)
        diag.append(d_row)
        partner.append(p_row)
        off.append(o_row)
    return HeckeIrrep(lam=lam, tableaux=tableaux, diag=diag, partner=partner, off=off)


def irrep_character(lam: Partition, beta: BraidWord) -> RationalFunction:
    if beta.strands != lam.size():
        raise SizeMismatch(f"braid on {beta.strands} strands but |{lam.label()}| = {lam.size()}")
    return trace(seminormal_irrep(lam).word_matrix(beta))


def quadratic_relation_holds(irrep: HeckeIrrep, i: int) -> bool:
    """(g - q)(g + q^{-1}) = 0, i.e. g^2 = -[1]_t g + 1."""
    g = irrep.generator_matrix(i)
    g2 = irrep.right_apply(g, i)
    d = irrep.dimension
    rhs = [[g[r][c] * NEG_BRACKET_ONE + (ONE if r == c else ZERO) for c in range(d)] for r in range(d)]
    return matrices_equal(g2, rhs)


def braid_relations_hold(irrep: HeckeIrrep) -> bool:
    n = irrep.n
    for i in range(1, n - 1):
        left = irrep.word_matrix(BraidWord(n, (i, i + 1, i)))
        right = irrep.word_matrix(BraidWord(n, (i + 1, i, i + 1)))
        if not matrices_equal(left, right):
            return False
    for i in range(1, n):
        for j in range(i + 2, n):
            if not matrices_equal(irrep.word_matrix(BraidWord(n, (i, j))), irrep.word_matrix(BraidWord(n, (j, i)))):
                return False
    return True


def full_twist_check(lam: Partition, kappa_value: Optional[int] = None) -> bool:
    """rho(Delta_n^2) = q^{kappa} * identity, q^{kappa} = t^{-kappa/2}."""
    if kappa_value is None:
        kappa_value = kappa(lam)
    n = lam.size()
    irrep = seminormal_irrep(lam)
    if n < 2:
        return kappa_value == 0
    twisted = irrep.word_matrix(full_twist(n))
    return matrices_equal(twisted, scalar_matrix(_monomial(Fraction(-kappa_value, 2)), irrep.dimension))


def sum_of_squares_check(n: int) -> bool:
    """sum_lam (dim S^lam)^2 = n!, with dim read off as the trace of the identity."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    total = 0
    for lam in partitions_of(n):
        value = irrep_character(lam, BraidWord(n))
        total += int(value.numerator.constant_term()) ** 2
    return total == math.factorial(n)


@dataclass
class ProjectorMatrix:
    """A product of block projectors in S^lam; blocks holds (mu, offset) pairs."""

    lam: Partition
    blocks: Tuple[Tuple[Partition, int], ...]
    matrix: Matrix

    def is_idempotent(self) -> bool:
        return matrices_equal(matmul(self.matrix, self.matrix), self.matrix)

    def commutes_with_blocks(self) -> bool:
        irrep = seminormal_irrep(self.lam)
        for mu, offset in self.blocks:
            for i in range(offset + 1, offset + mu.size()):
                if not matrices_equal(irrep.left_apply(self.matrix, i), irrep.right_apply(self.matrix, i)):
                    return False
        return True

    def rank(self) -> int:
        value = trace(self.matrix)
        if not value.is_laurent() or not value.numerator.is_constant():
            raise ArithmeticError(f"projector trace is not a constant: {value}")
        return int(value.numerator.constant_term())


def _jm_matrix(irrep: HeckeIrrep, offset: int, j: int) -> Matrix:
    # L'_j = g_{a+j-1} ... g_{a+1} g_{a+1} ... g_{a+j-1}, a = offset
    letters = list(range(offset + j - 1, offset, -1)) + list(range(offset + 1, offset + j))
    x = identity_matrix(irrep.dimension)
    for letter in letters:
        x = irrep.right_apply(x, letter)
    return x


def _diagonal_block_projector(irrep: HeckeIrrep, mu: Partition) -> Matrix:
    # At offset 0 the seminormal basis diagonalizes the block's JM elements.
    target = superstandard_word(mu)
    m = len(target)
    return [[ONE if r == c and irrep.tableaux[r][:m] == target else ZERO for c in range(irrep.dimension)] for r in range(irrep.dimension)]


@lru_cache(maxsize=None)
def block_projector(lam: Partition, mu: Partition, offset: int, interpolate: bool = False) -> ProjectorMatrix:
    """
    Image of the minimal projection p_mu of H_m(q), placed on strands offset+1..offset+m, in S^lam.

    Built as prod_j prod_c (L'_j - t^{-c}) / (t^{-c_U(j)} - t^{-c}) over the
    addable contents c other than c_U(j), U the row-superstandard tableau of mu.
    """
    irrep = seminormal_irrep(lam)
    if offset + mu.size() > lam.size():
        raise SizeMismatch(f"block {mu.label()} at offset {offset} does not fit in H_{lam.size()}")
    if offset == 0 and not interpolate:
        return ProjectorMatrix(lam=lam, blocks=((mu, offset),), matrix=_diagonal_block_projector(irrep, mu))
    d = irrep.dimension
    target = superstandard_word(mu)
    target_contents = row_word_contents(target)
    result = identity_matrix(d)
    shape: List[int] = []
    for j in range(1, len(target) + 1):
        c_u = target_contents[j - 1]
        if j > 1:
            jm = _jm_matrix(irrep, offset, j)
            nodes = addable_contents(Partition(tuple(shape)))
            if c_u not in nodes:
                raise SpectralCollision(f"content {c_u} of step {j} is not a node of the spectrum of L'_{j} in block {mu.label()}")
            for c in nodes:
                if c == c_u:
                    continue
                scale = RationalFunction.bracket_ratio(ExactLaurent.monomial(Fraction(c_u + c, 2), 0), Variable.T, c - c_u)
                factor = [[(jm[r][s] - (_monomial(Fraction(-c)) if r == s else ZERO)) * scale for s in range(d)] for r in range(d)]
                result = matmul(result, factor)
        row = target[j - 1]
        if row == len(shape):
            shape.append(1)
        else:
            shape[row] += 1
    return ProjectorMatrix(lam=lam, blocks=((mu, offset),), matrix=result)


def jm_projector(n: int, blocks: PartitionTuple, lam: Partition) -> ProjectorMatrix:
    """Product of block projectors for consecutive blocks starting at strand 1; trailing strands stay free."""
    if lam.size() != n:
        raise SizeMismatch(f"|{lam.label()}| != {n}")
    if blocks.size() > n:
        raise SizeMismatch(f"blocks of total size {blocks.size()} exceed {n} strands")
    matrix = identity_matrix(len(standard_tableaux(lam)))
    placed = []
    offset = 0
    for mu in blocks:
        if mu.size() > 1:
            matrix = matmul(matrix, block_projector(lam, mu, offset).matrix)
        placed.append((mu, offset))
        offset += mu.size()
    return ProjectorMatrix(lam=lam, blocks=tuple(placed), matrix=matrix)


def projector_rank(lam: Partition, blocks: PartitionTuple) -> int:
    return jm_projector(lam.size(), blocks, lam).rank()


def expected_projector_rank(lam: Partition, blocks: PartitionTuple) -> int:
    """Multiplicity count from stretched LR data with r = 1: sum_nu c^lam_{blocks, nu} dim(nu)."""
    remaining = lam.size() - blocks.size()
    nonempty = blocks.nonempty()
    if not nonempty:
        return dimension(lam)
    if remaining == 0:
        return stretched_lr(PartitionTuple(nonempty), 1)[lam]
    total = 0
    for nu in partitions_of(remaining):
        total += stretched_lr(PartitionTuple(nonempty + (nu,)), 1)[lam] * dimension(nu)
    return total


def _cabled_projector(irrep: HeckeIrrep, cabled: CabledBraid, colors_by_strand: Sequence[Partition]) -> Matrix:
    matrix = identity_matrix(irrep.dimension)
    for mu, offset in zip(colors_by_strand, cabled.block_offsets()):
        if mu.size() > 1:
            matrix = matmul(matrix, block_projector(irrep.lam, mu, offset).matrix)
    return matrix


def cabled_traces(word: BraidWord, colors_by_strand: Sequence[Partition], labels: Optional[Sequence[int]] = None) -> Tuple[CabledBraid, Dict[Partition, RationalFunction]]:
    """zeta^lam(h(cabled word) * prod of block projectors) for every lam of the cabled size."""
    cabled = cable(word, [mu.size() for mu in colors_by_strand], labels)
    traces: Dict[Partition, RationalFunction] = {}
    for lam in partitions_of(cabled.word.strands):
        irrep = seminormal_irrep(lam)
        projector = _cabled_projector(irrep, cabled, colors_by_strand)
        value = trace(irrep.word_matrix(cabled.word, start=projector))
        if value:
            traces[lam] = value
    return cabled, traces


def _assemble(cabled: CabledBraid, colors: Dict[int, Partition], traces: Dict[Partition, RationalFunction]) -> RationalFunction:
    counts = cabled.word.component_writhes(cabled.strand_labels)
    e_t = Fraction(0)
    e_v = Fraction(0)
    for component, mu in colors.items():
        n = mu.size()
        count = counts.get(component, 0)
        if count % (n * n):
            raise ArithmeticError(f"cabled self-crossings {count} of component {component} not divisible by {n * n}")
        writhe = count // (n * n)
        e_t += Fraction(kappa(mu) * writhe, 2)
        e_v += Fraction(n * writhe, 2)
    total = ZERO
    for lam, value in traces.items():
        total = total + value * s_star_hook(lam)
    return total.shift(e_t, e_v)


def colored_homfly_braid(word: BraidWord, colors: Sequence[Partition]) -> RationalFunction:
    """W of the closure of word, colors listed per component (components ordered by smallest strand)."""
    labels = word.components()
    if len(colors) != max(labels) + 1:
        raise SizeMismatch(f"closure has {max(labels) + 1} components but {len(colors)} colors were given")
    if any(mu.is_empty() for mu in colors):
        raise ValueError("every component needs a nonempty color")
    by_strand = [colors[label] for label in labels]
    cabled, traces = cabled_traces(word, by_strand, labels)
    return _assemble(cabled, dict(enumerate(colors)), traces)


def braid_pipeline(link: TorusLinkSpec, colors: PartitionTuple) -> ColoredInvariant:
    """The torus invariant from matrices, projectors and writhe counting alone."""
    if len(colors) != link.l:
        raise SizeMismatch(f"{link.name()} has {link.l} components but {len(colors)} colors were given")
    value = colored_homfly_braid(torus_braid(link), list(colors.entries))
    return ColoredInvariant(link=link, colors=colors, value=value)


def cabled_trace_check(r: int, k: int, colors: PartitionTuple, lam: Partition) -> bool:
    """zeta^lam(cabled torus braid * projectors) = c^lam t^{(k sum kappa_i - k kappa_lam / r)/2}."""
    link = TorusLinkSpec(r, k, len(colors))
    if lam.size() != r * colors.size():
        raise SizeMismatch(f"|{lam.label()}| != {r * colors.size()}")
    word = torus_braid(link)
    labels = word.components()
    by_strand = [colors[label] for label in labels]
    cabled = cable(word, [mu.size() for mu in by_strand], labels)
    irrep = seminormal_irrep(lam)
    projector = _cabled_projector(irrep, cabled, by_strand)
    left = trace(irrep.word_matrix(cabled.word, start=projector))
    kappa_sum = sum(kappa(mu) for mu in colors)
    exponent = Fraction(k * kappa_sum, 2) - Fraction(k * kappa(lam), 2 * r)
    right = _monomial(exponent).scale(stretched_lr(colors, r)[lam])
    if left != right:
        logger.debug(f"Cabled trace check failed r={r} k={k} colors={colors} lam={lam.label()}: {left} != {right}")
        return False
    return True


def desk_instances(max_cells: int, ks: Sequence[int] = (1, -1, 2, 3)) -> List[Tuple[TorusLinkSpec, PartitionTuple]]:
    """Every (link, colors) with r * sum|colors| <= max_cells for the given k values."""
    instances = []
    for r in range(1, max_cells + 1):
        for l in range(1, max_cells // r + 1):  # noqa: E741
            for k in ks:
                if math.gcd(r, abs(k)) != 1:
                    continue
                if r == 1 and l == 1 and k != 1:
                    continue
                link = TorusLinkSpec(r, k, l)
                for total in range(l, max_cells // r + 1):
                    for degree in _compositions(total, l):
                        for colors in tuples_of_degree(degree):
                            instances.append((link, colors))
    return instances


def _compositions(total: int, parts: int) -> List[Tuple[int, ...]]:
    if parts == 1:
        return [(total,)] if total >= 1 else []
    result = []
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            result.append((first,) + rest)
    return result
