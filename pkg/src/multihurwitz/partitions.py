"""Integer partitions, conjugacy-class counting and Young-diagram geometry.

Partitions are listed in reverse-lexicographic order everywhere, e.g. for
n = 4: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .errors import UsageError


class Partition(tuple):
    """An integer partition, stored as a weakly decreasing tuple of parts.

    Being a tuple, a partition hashes and compares like one; descending tuple
    order is exactly the canonical reverse-lexicographic order.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise UsageError(f"partition parts must be positive integers, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise UsageError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts in any order."""
        return cls(sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the textual form ``"3,1,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise UsageError(f"malformed partition {text!r}: expected comma-separated integers like '3,1,1'") from None
        return cls(parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells (row, column) of the Young diagram, 1-based, row by row."""
        for i, part in enumerate(self, start=1):
            for j in range(1, part + 1):
                yield i, j

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def format_partition(p: Sequence[int]) -> str:
    return ",".join(map(str, p))


def _partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions(n, n))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise UsageError(f"cannot partition a negative integer ({n})")
    return list(_partitions_cached(n))


def stabilizer_order(mu: Partition) -> int:
    """Z_mu = prod_i i^{j_i} j_i!, the centralizer order of a permutation of cycle type mu."""
    return prod(i**j * factorial(j) for i, j in Counter(mu).items())


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // stabilizer_order(mu)


def contents(lam: Partition) -> list[int]:
    """Contents j - i of the cells (i, j) of the Young diagram, row by row."""
    return [j - i for i, j in Partition(lam).cells()]


def _det(matrix: list[list[Fraction]]) -> Fraction:
    a = [row[:] for row in matrix]
    size = len(a)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            factor = a[r][col] / a[col][col]
            if factor:
                for c in range(col, size):
                    a[r][c] -= factor * a[col][c]
    return det


@lru_cache(maxsize=None)
def dimension(lam: Partition) -> int:
    """Dimension of the irreducible representation of S_n labelled by ``lam``.

    Evaluated with the determinant formula
    d = n! det(1 / (lam_i - i + j)!), with 1/k! = 0 for k < 0.
    """
    lam = Partition(lam)
    if not lam:
        raise UsageError("dimension is defined for nonempty partitions only")
    size = len(lam)
    matrix = [
        [Fraction(1, factorial(lam[i] - i + j)) if lam[i] - i + j >= 0 else Fraction(0) for j in range(size)]
        for i in range(size)
    ]
    value = factorial(lam.weight) * _det(matrix)
    assert value.denominator == 1 and value > 0
    return int(value)


@lru_cache(maxsize=None)
def hook_product(lam: Partition) -> int:
    """Product of all hook lengths of ``lam``; equals |lam|! / dimension(lam)."""
    lam = Partition(lam)
    if not lam:
        raise UsageError("hook_product is defined for nonempty partitions only")
    conj = lam.conjugate()
    return prod(lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in lam.cells())


def colength(mu: Partition) -> int:
    """|mu| - l(mu): how many sheets a branch point of profile mu removes."""
    return sum(mu) - len(mu)


def partitions_with_colength(n: int, c: int) -> list[Partition]:
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    if not 0 <= c <= n - 1:
        raise UsageError(f"colength {c} impossible for partitions of {n} (need 0 <= c <= {n - 1})")
    return [p for p in partitions_of(n) if colength(p) == c]


def sign(mu: Partition) -> int:
    """Sign of any permutation of cycle type mu."""
    return -1 if colength(mu) % 2 else 1


@dataclass(frozen=True)
class RamificationData:
    """Profiles over 0 and infinity plus the colength data of the extra branch points."""

    mu: Partition
    nu: Partition
    c: tuple[int, ...] = field(default=())
    d: tuple[int, ...] = field(default=())

    def __post_init__(self):
        for name in ("mu", "nu"):
            value = getattr(self, name)
            object.__setattr__(self, name, Partition.parse(value) if isinstance(value, str) else Partition(value))
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        if self.mu.weight != self.nu.weight:
            raise UsageError(f"weight mismatch: |mu|={self.mu.weight}, |nu|={self.nu.weight}")
        if any(x < 0 for x in self.c + self.d):
            raise UsageError("colength data c and d must be non-negative")

    @property
    def n(self) -> int:
        return self.mu.weight


def double_genus(data: RamificationData) -> int:
    """Twice the genus of the covering surface, from the Riemann-Hurwitz formula.

    An odd value means a half-integer genus, which only makes sense for
    nonorientable covers.
    """
    return 2 + sum(data.c) + sum(data.d) - len(data.mu) - len(data.nu)
