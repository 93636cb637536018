"""
Irreducible characters of the symmetric groups by the Murnaghan-Nakayama rule.

Tables are built once per n under a per-n lock and shared read-only. When
persistence is on they are also written to a checksummed JSON file that is
discarded, never trusted, if it fails validation.
"""

import hashlib
import json
import logging
import os
import tempfile
import threading
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from .combinatorics import Partition, partitions_of
from .errors import SizeMismatch
from .paths import character_cache_file, persistence_requested
from .records import CACHE_VERSION, CharacterCacheFile, CharacterTableRecord

logger = logging.getLogger(__name__)

CACHE_WRITE_LOCK = threading.Lock()


def _beta_set(parts: Tuple[int, ...]) -> Tuple[int, ...]:
    length = len(parts)
    return tuple(part + length - 1 - i for i, part in enumerate(parts))


def _from_beta(beta: List[int]) -> Tuple[int, ...]:
    length = len(beta)
    ordered = sorted(beta, reverse=True)
    return tuple(b - (length - 1 - i) for i, b in enumerate(ordered) if b - (length - 1 - i) > 0)


@lru_cache(maxsize=None)
def _murnaghan_nakayama(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    strip = mu[0]
    rest = mu[1:]
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - strip
        if target < 0 or target in occupied:
            continue
        # Leg length: beta numbers jumped over while sliding b down to target.
        height = sum(1 for other in beta if target < other < b)
        moved = [target if other == b else other for other in beta]
        value = _murnaghan_nakayama(_from_beta(moved), rest)
        total += -value if height % 2 else value
    return total


def character(lam: Partition, mu: Partition) -> int:
    """chi^lam on the class of cycle type mu."""
    if lam.size() != mu.size():
        raise SizeMismatch(f"|{lam.label()}| = {lam.size()} but |{mu.label()}| = {mu.size()}")
    return _murnaghan_nakayama(lam.parts, mu.parts)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: Tuple[Partition, ...]
    values: Tuple[Tuple[int, ...], ...]

    def index(self, p: Partition) -> int:
        return self.partitions.index(p)

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.values[self.index(lam)][self.index(mu)]

    def row(self, lam: Partition) -> Tuple[int, ...]:
        return self.values[self.index(lam)]

    def column(self, mu: Partition) -> Tuple[int, ...]:
        j = self.index(mu)
        return tuple(row[j] for row in self.values)


def _build_table(n: int) -> CharacterTable:
    parts = tuple(partitions_of(n))
    values = tuple(tuple(character(lam, mu) for mu in parts) for lam in parts)
    return CharacterTable(n=n, partitions=parts, values=values)


def _checksum(partitions: List[str], values: List[List[int]]) -> str:
    payload = json.dumps({"partitions": partitions, "values": values}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def table_to_record(table: CharacterTable) -> CharacterTableRecord:
    partitions = [str(p) for p in table.partitions]
    values = [list(row) for row in table.values]
    return CharacterTableRecord(n=table.n, partitions=partitions, values=values, checksum=_checksum(partitions, values))


def table_from_record(record: CharacterTableRecord) -> Optional[CharacterTable]:
    """The table a record describes, or None when it fails any integrity check."""
    if _checksum(record.partitions, record.values) != record.checksum:
        return None
    expected = partitions_of(record.n)
    if record.partitions != [str(p) for p in expected]:
        return None
    if len(record.values) != len(expected) or any(len(row) != len(expected) for row in record.values):
        return None
    return CharacterTable(n=record.n, partitions=tuple(expected), values=tuple(tuple(row) for row in record.values))


def load_cache_file(path: Path) -> Dict[int, CharacterTable]:
    if not path.exists():
        return {}
    try:
        cache = CharacterCacheFile.model_validate_json(path.read_text(encoding="utf-8"))
    except (OSError, ValueError, ValidationError) as e:
        logger.warning(f"Discarding unreadable character cache {path}: {e}")
        return {}
    if cache.version != CACHE_VERSION:
        logger.warning(f"Discarding character cache {path}: version {cache.version} != {CACHE_VERSION}")
        return {}
    tables: Dict[int, CharacterTable] = {}
    for record in cache.tables:
        table = table_from_record(record)
        if table is None:
            logger.warning(f"Discarding corrupt character table n={record.n} in {path}")
            continue
        tables[table.n] = table
    return tables


def save_cache_file(path: Path, tables: Dict[int, CharacterTable]) -> None:
    cache = CharacterCacheFile(version=CACHE_VERSION, tables=[table_to_record(tables[n]) for n in sorted(tables)])
    with CACHE_WRITE_LOCK:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=".character_tables.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                f.write(cache.model_dump_json())
            os.replace(tmp_name, path)
        except OSError:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise


class CharacterStore:
    """
    Process-wide registry of completed character tables.

    One builder per n; readers of an already built n never wait on a
    builder of a different n.
    """

    def __init__(self, cache_path: Optional[Path] = None):
        self._cache_path = cache_path
        self._tables: Dict[int, CharacterTable] = {}
        self._building: Dict[int, threading.Lock] = {}
        self._lock = threading.Lock()
        self._loaded = False

    @property
    def cache_path(self) -> Optional[Path]:
        return self._cache_path

    def configure(self, cache_path: Optional[Path]) -> None:
        """Switch persistence on (a path) or off (None)."""
        with self._lock:
            self._cache_path = cache_path
            self._loaded = False

    def _ensure_loaded(self) -> None:
        with self._lock:
            if self._loaded or self._cache_path is None:
                return
            self._loaded = True
            path = self._cache_path
        loaded = load_cache_file(path)
        if loaded:
            logger.debug(f"Loaded character tables {sorted(loaded)} from {path}")
        with self._lock:
            for n, table in loaded.items():
                self._tables.setdefault(n, table)

    def table(self, n: int) -> CharacterTable:
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        self._ensure_loaded()
        with self._lock:
            cached = self._tables.get(n)
            if cached is not None:
                return cached
            builder = self._building.setdefault(n, threading.Lock())
        with builder:
            with self._lock:
                cached = self._tables.get(n)
            if cached is not None:
                return cached
            logger.debug(f"Character table cache miss for n={n}")
            table = _build_table(n)
            with self._lock:
                self._tables[n] = table
                snapshot = dict(self._tables)
                path = self._cache_path
            if path is not None:
                try:
                    save_cache_file(path, snapshot)
                except OSError as e:
                    logger.warning(f"Could not write character cache {path}: {e}")
            return table

    def clear(self) -> None:
        with self._lock:
            self._tables.clear()
            self._building.clear()
            self._loaded = False


STORE = CharacterStore(character_cache_file() if persistence_requested() else None)


def character_table(n: int) -> CharacterTable:
    return STORE.table(n)
