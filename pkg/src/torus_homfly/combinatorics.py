"""
Partitions and the index data every other module consumes.

Partitions are stored weakly decreasing with no zero parts. Enumeration is in
reverse-lexicographic order, which fixes the row/column order of every matrix
built downstream.
"""

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from .errors import InvalidColors

RowWord = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.parts, tuple):
            raise TypeError("Partition parts must be a tuple of ints.")
        previous = None
        for part in self.parts:
            if not isinstance(part, int) or isinstance(part, bool):
                raise TypeError(f"Partition part must be an int, got {part!r}")
            if part < 1:
                raise ValueError(f"Partition parts must be positive, got {self.parts}")
            if previous is not None and part > previous:
                raise ValueError(f"Partition parts must be weakly decreasing, got {self.parts}")
            previous = part

    @classmethod
    def _trusted(cls, parts: Tuple[int, ...]) -> "Partition":
        # Internal hot paths build parts that are canonical by construction.
        obj = object.__new__(cls)
        object.__setattr__(obj, "parts", parts)
        return obj

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort and drop zeros; accepts any multiset of nonnegative ints."""
        cleaned = sorted((int(p) for p in parts if p != 0), reverse=True)
        return cls(tuple(cleaned))

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse "2,1"; the empty string and "0" are the empty partition."""
        stripped = text.strip().strip("()")
        if stripped in ("", "0"):
            return cls(())
        try:
            values = [int(piece) for piece in stripped.split(",") if piece.strip() != ""]
        except ValueError as e:
            raise ValueError(f"Invalid partition syntax: {text!r}") from e
        if any(v < 0 for v in values):
            raise ValueError(f"Invalid partition syntax: {text!r}")
        return cls(tuple(v for v in values if v != 0))

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def is_empty(self) -> bool:
        return not self.parts

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition._trusted(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def multiplicities(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for part in self.parts:
            counts[part] = counts.get(part, 0) + 1
        return counts

    def cells(self) -> Iterator[Tuple[int, int]]:
        for i, part in enumerate(self.parts):
            for j in range(part):
                yield i, j

    def sign(self) -> int:
        """Sign of any permutation of cycle type self."""
        return -1 if (self.size() - self.length()) % 2 else 1

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def label(self) -> str:
        """Parenthesized form used in text reports, e.g. (2,1)."""
        return "(" + str(self) + ")" if self.parts else "()"


@dataclass(frozen=True)
class PartitionTuple:
    entries: Tuple[Partition, ...]

    def __post_init__(self):
        if not isinstance(self.entries, tuple):
            raise TypeError("PartitionTuple entries must be a tuple.")
        if not self.entries:
            raise InvalidColors("A partition tuple needs at least one entry.")
        for entry in self.entries:
            if not isinstance(entry, Partition):
                raise TypeError(f"Expected Partition, got {entry!r}")

    @classmethod
    def of(cls, *entries: Partition) -> "PartitionTuple":
        return cls(tuple(entries))

    @classmethod
    def from_string(cls, text: str) -> "PartitionTuple":
        """Parse "2|1,1"; entries may be empty ("|1")."""
        return cls(tuple(Partition.from_string(piece) for piece in text.split("|")))

    def degree(self) -> Tuple[int, ...]:
        return tuple(entry.size() for entry in self.entries)

    def size(self) -> int:
        return sum(self.degree())

    def nonempty(self) -> Tuple[Partition, ...]:
        return tuple(entry for entry in self.entries if entry.parts)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> Partition:
        return self.entries[index]

    def __str__(self) -> str:
        return "|".join(str(entry) for entry in self.entries)


def _generate(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _generate(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> Tuple[Partition, ...]:
    return tuple(Partition._trusted(parts) for parts in _generate(n, n))


def partitions_of(n: int) -> List[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return list(_partitions_cached(n))


def tuples_of_degree(degree: Sequence[int]) -> List[PartitionTuple]:
    """Every partition tuple with the given degree vector, in product order."""
    pools = [_partitions_cached(n) for n in degree]
    return [PartitionTuple(tuple(combo)) for combo in itertools.product(*pools)]


def degree_vectors_upto(caps: Sequence[int]) -> List[Tuple[int, ...]]:
    """Every degree vector componentwise <= caps except the zero vector."""
    ranges = [range(cap + 1) for cap in caps]
    return [vec for vec in itertools.product(*ranges) if any(vec)]


@lru_cache(maxsize=None)
def z_value(mu: Partition) -> int:
    """Centralizer order z_mu = prod_i i^{m_i} m_i!."""
    value = 1
    for part, count in mu.multiplicities().items():
        value *= part**count * math.factorial(count)
    return value


def class_size(mu: Partition) -> int:
    """|C_mu| = n!/z_mu."""
    return math.factorial(mu.size()) // z_value(mu)


def kappa(lam: Partition) -> int:
    return sum(2 * (j - i) for i, j in lam.cells())


def contents(lam: Partition) -> List[int]:
    return [j - i for i, j in lam.cells()]


def hooks_contents(lam: Partition) -> List[Tuple[int, int]]:
    """(hook length, content) for every cell, row by row."""
    conj = lam.conjugate().parts
    return [(lam.parts[i] - j + conj[j] - i - 1, j - i) for i, j in lam.cells()]


def dimension(lam: Partition) -> int:
    """Number of standard tableaux, by the hook-length formula."""
    product = 1
    for hook, _ in hooks_contents(lam):
        product *= hook
    return math.factorial(lam.size()) // product


def add_partitions(mu1: Partition, mu2: Partition) -> Partition:
    """Union of part multisets."""
    if not mu1.parts:
        return mu2
    if not mu2.parts:
        return mu1
    return Partition._trusted(tuple(sorted(mu1.parts + mu2.parts, reverse=True)))


def stretch(mu: Partition, r: int) -> Partition:
    """The partition (r*mu_1, r*mu_2, ...)."""
    if r < 1:
        raise ValueError(f"stretch factor must be positive, got {r}")
    return Partition._trusted(tuple(r * p for p in mu.parts))


def addable_contents(lam: Partition) -> List[int]:
    """Contents of the cells that can be added to lam, top row first."""
    result = []
    parts = lam.parts
    for i in range(len(parts) + 1):
        row = parts[i] if i < len(parts) else 0
        if i == 0 or parts[i - 1] > row:
            result.append(row - i)
    return result


@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition) -> Tuple[RowWord, ...]:
    """
    Standard tableaux of shape lam as row words: entry j+1 sits in row word[j].

    Sorted lexicographically, so the row-superstandard tableau comes first.
    """
    if not lam.parts:
        return ((),)
    words = []
    parts = lam.parts
    for i, part in enumerate(parts):
        is_corner = i == len(parts) - 1 or parts[i + 1] < part
        if not is_corner:
            continue
        smaller = Partition._trusted(tuple(p for p in parts[:i] + (part - 1,) + parts[i + 1 :] if p > 0))
        for word in standard_tableaux(smaller):
            words.append(word + (i,))
    return tuple(sorted(words))


def row_word_contents(word: RowWord) -> Tuple[int, ...]:
    """Content of each entry of the tableau encoded by a row word."""
    filled: Dict[int, int] = {}
    result = []
    for row in word:
        col = filled.get(row, 0)
        result.append(col - row)
        filled[row] = col + 1
    return tuple(result)


def superstandard_word(lam: Partition) -> RowWord:
    return tuple(i for i, part in enumerate(lam.parts) for _ in range(part))


def divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"mobius is defined on positive integers, got {n}")
    result = 1
    remaining = n
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            remaining //= p
            if remaining % p == 0:
                return 0
            result = -result
        p += 1
    if remaining > 1:
        result = -result
    return result
