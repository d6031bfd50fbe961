"""Irreducible characters of the symmetric group.

Values come from the Murnaghan-Nakayama rule on beta-sets, memoized on
(lambda, mu).  Whole tables can be persisted as versioned JSON, one file per n,
under ``$HURWITZ_CACHE_DIR`` (default ``$XDG_DATA_HOME/multihurwitz`` or
``~/.local/share/multihurwitz``).  The cache is advisory: anything unreadable
is recomputed and overwritten.
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
import threading
import warnings
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .errors import CapExceededError, UsageError
from .partitions import Partition, partitions_of

log = logging.getLogger(__name__)

CACHE_VERSION = 1
DEFAULT_TABLE_CAP = 14
CACHE_ENV = "HURWITZ_CACHE_DIR"


def _beta_to_partition(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    size = len(beta)
    parts = [b - (size - 1 - i) for i, b in enumerate(beta)]
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    size = len(lam)
    beta = [p + size - 1 - i for i, p in enumerate(lam)]
    occupied = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        target = b - k
        if target < 0 or target in occupied:
            continue
        # leg length of the removed rim hook = beads jumped over
        height = sum(1 for x in beta if target < x < b)
        new_beta = beta[:idx] + [target] + beta[idx + 1:]
        value = _mn(_beta_to_partition(new_beta), rest)
        total += -value if height % 2 else value
    return total


def character(lam: Partition, mu: Partition) -> int:
    """chi_lambda(mu), the irreducible character lambda on the class of cycle type mu."""
    lam, mu = tuple(lam), tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise UsageError(f"weight mismatch: |lambda|={sum(lam)} but |mu|={sum(mu)}")
    return _mn(lam, mu)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple[Partition, ...]
    table: tuple[tuple[int, ...], ...]  # table[row lambda][column mu]

    def __post_init__(self):
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.partitions)})

    def __call__(self, lam, mu) -> int:
        return self.table[self._index[Partition(lam)]][self._index[Partition.from_parts(mu)]]

    def row(self, lam) -> tuple[int, ...]:
        return self.table[self._index[Partition(lam)]]

    def to_json(self) -> dict:
        return {
            "version": CACHE_VERSION,
            "n": self.n,
            "partitions": [str(p) for p in self.partitions],
            "table": [list(r) for r in self.table],
        }

    @classmethod
    def from_json(cls, payload: dict) -> "CharacterTable":
        if payload.get("version") != CACHE_VERSION:
            raise ValueError(f"unsupported cache version {payload.get('version')!r}")
        n = int(payload["n"])
        parts = tuple(Partition.parse(s) for s in payload["partitions"])
        if parts != tuple(partitions_of(n)):
            raise ValueError("partition index does not match canonical order")
        table = tuple(tuple(int(x) for x in row) for row in payload["table"])
        if len(table) != len(parts) or any(len(row) != len(parts) for row in table):
            raise ValueError("table shape does not match partition index")
        return cls(n, parts, table)


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_DATA_HOME") or Path.home() / ".local" / "share"
    return Path(base) / "multihurwitz"


def _cache_path(n: int, cache_dir: Path) -> Path:
    return cache_dir / f"characters_n{n}.json"


def _write_atomic(path: Path, payload: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh, separators=(",", ":"))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def compute_character_table(n: int) -> CharacterTable:
    parts = tuple(partitions_of(n))
    table = tuple(tuple(character(lam, mu) for mu in parts) for lam in parts)
    return CharacterTable(n, parts, table)


_tables: dict[int, CharacterTable] = {}
_table_lock = threading.Lock()


def character_table(n: int, *, cap: int = DEFAULT_TABLE_CAP, cache_dir=None, use_cache: bool = True) -> CharacterTable:
    """The full character table of S_n, from the in-process memo, the disk cache, or computed."""
    if n < 1:
        raise UsageError(f"character tables need n >= 1, got {n}")
    if n > cap:
        raise CapExceededError("character table size n =", n, cap)
    table = _tables.get(n)
    if table is not None:
        return table
    with _table_lock:
        table = _tables.get(n)
        if table is not None:
            return table
        path = _cache_path(n, Path(cache_dir) if cache_dir else default_cache_dir())
        if use_cache and path.exists():
            try:
                table = CharacterTable.from_json(json.loads(path.read_text()))
                if table.n != n:
                    raise ValueError(f"file holds n={table.n}")
            except (ValueError, KeyError, TypeError) as exc:
                warnings.warn(f"corrupt character cache {path} ({exc}); recomputing", RuntimeWarning, stacklevel=2)
                table = None
        if table is None:
            table = compute_character_table(n)
            if use_cache:
                try:
                    _write_atomic(path, table.to_json())
                except OSError as exc:
                    log.warning("could not write character cache %s: %s", path, exc)
        _tables[n] = table
        return table


def clear_memo() -> None:
    """Forget in-process tables (the disk cache is untouched)."""
    with _table_lock:
        _tables.clear()
