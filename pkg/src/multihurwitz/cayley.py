"""Brute-force ground truth in explicit symmetric groups.

Nothing here uses characters except :func:`idempotent`, which is defined by
them.  Counting works on exact states (a permutation plus the current band
cursor) and is deliberately naive.

Path convention: a path starts at g and multiplies by transpositions
t_1, ..., t_k.  We accumulate g t_1 ... t_k, which is conjugate to
t_1 ... t_k g, so both give the same cycle type.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Literal, Mapping, Sequence

from .characters import character
from .errors import CapExceededError, UsageError
from .partitions import Partition, hook_product, partitions_of

DEFAULT_BRUTE_CAP = 7

Images = tuple  # 0-based images, images[i] = g(i)


@dataclass(frozen=True)
class Perm:
    """A permutation of {1..n}; ``images[i - 1]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise UsageError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Perm":
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for x, y in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                images[x - 1] = y
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        # (self * other)(i) = self(other(i))
        return Perm(tuple(self.images[j - 1] for j in other.images))


def _cycle_type(images: Sequence[int], base: int) -> Partition:
    seen = [False] * len(images)
    lengths = []
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = images[i] - base
            length += 1
        lengths.append(length)
    return Partition.from_parts(lengths)


def cycle_type(g: Perm) -> Partition:
    return _cycle_type(g.images, 1)


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceededError("brute-force group size n =", n, cap)


@lru_cache(maxsize=8)
def class_elements(n: int) -> dict[Partition, tuple[Images, ...]]:
    """All elements of S_n as 0-based image tuples, grouped by cycle type."""
    out: dict[Partition, list] = defaultdict(list)
    for images in permutations(range(n)):
        out[_cycle_type(images, 0)].append(images)
    return {mu: tuple(out[mu]) for mu in partitions_of(n)}


@lru_cache(maxsize=8)
def _cycle_type_lookup(n: int) -> dict[Images, Partition]:
    return {g: mu for mu, elems in class_elements(n).items() for g in elems}


@dataclass(frozen=True)
class BandSpec:
    """Ordered bands of transpositions, each strictly or weakly monotone in the larger entries."""

    bands: tuple[tuple[int, str], ...]

    def __post_init__(self):
        bands = tuple((int(length), str(mode)) for length, mode in self.bands)
        for length, mode in bands:
            if length < 0 or mode not in ("strict", "weak"):
                raise UsageError(f"bad band ({length}, {mode!r})")
        object.__setattr__(self, "bands", bands)

    @classmethod
    def from_cd(cls, c: Sequence[int] = (), d: Sequence[int] = ()) -> "BandSpec":
        """Strict bands of lengths c followed by weak bands of lengths d."""
        return cls(tuple((x, "strict") for x in c) + tuple((x, "weak") for x in d))

    @property
    def total_length(self) -> int:
        return sum(length for length, _ in self.bands)


def monotone_pair_distribution(mu, bands: BandSpec, *, cap: int = DEFAULT_BRUTE_CAP) -> dict[Partition, int]:
    """Number of (g, transposition sequence) pairs with g in cyc_mu, keyed by the end class."""
    mu = Partition.parse(mu) if isinstance(mu, str) else Partition.from_parts(mu)
    n = mu.weight
    _check_cap(n, cap)
    if n < 1:
        raise UsageError("need n >= 1")
    return dict(_pair_distribution(mu, bands))


@lru_cache(maxsize=4096)
def _pair_distribution(mu: Partition, bands: BandSpec) -> tuple[tuple[Partition, int], ...]:
    n = mu.weight
    states: dict[Images, int] = {g: 1 for g in class_elements(n)[mu]}
    for length, mode in bands.bands:
        if length == 0:
            continue
        # exact state within a band: (product so far, larger entry of last transposition)
        cur: dict[tuple[Images, int], int] = {(x, 0): cnt for x, cnt in states.items()}
        for _ in range(length):
            nxt: dict[tuple[Images, int], int] = defaultdict(int)
            for (x, last), cnt in cur.items():
                lo = last + 1 if mode == "strict" else max(last, 1)
                for b in range(max(lo, 1), n):  # 0-based larger entry, so b >= 1
                    for a in range(b):
                        y = list(x)
                        y[a], y[b] = y[b], y[a]  # x * (a b)
                        nxt[(tuple(y), b)] += cnt
            cur = nxt
        states = defaultdict(int)
        for (x, _), cnt in cur.items():
            states[x] += cnt
    lookup = _cycle_type_lookup(n)
    out: dict[Partition, int] = defaultdict(int)
    for x, cnt in states.items():
        out[lookup[x]] += cnt
    return tuple(sorted(out.items(), reverse=True))


def count_monotone_pairs(mu, nu, bands: BandSpec, *, cap: int = DEFAULT_BRUTE_CAP) -> int:
    """#{(g, (a_1 b_1)...(a_k b_k))}: g in cyc_mu, band-monotone in the b_i, product in cyc_nu."""
    mu = Partition.parse(mu) if isinstance(mu, str) else Partition.from_parts(mu)
    nu = Partition.parse(nu) if isinstance(nu, str) else Partition.from_parts(nu)
    if mu.weight != nu.weight:
        raise UsageError(f"weight mismatch: |mu|={mu.weight}, |nu|={nu.weight}")
    return monotone_pair_distribution(mu, bands, cap=cap).get(nu, 0)


def count_cover_tuples(profiles: Sequence, *, cap: int = DEFAULT_BRUTE_CAP) -> int:
    """#{(g_1, ..., g_j) : g_a in cyc_{profile a}, g_1 ... g_j = identity}."""
    if not profiles:
        raise UsageError("need at least one profile")
    parts = [Partition.parse(p) if isinstance(p, str) else Partition.from_parts(p) for p in profiles]
    n = parts[0].weight
    if any(p.weight != n for p in parts):
        raise UsageError("profiles must share a weight")
    _check_cap(n, cap)
    classes = class_elements(n)
    dist: dict[Images, int] = {tuple(range(n)): 1}
    for p in parts:
        nxt: dict[Images, int] = defaultdict(int)
        for x, cnt in dist.items():
            for g in classes[p]:
                nxt[tuple(x[i] for i in g)] += cnt  # x * g
        dist = nxt
    return dist.get(tuple(range(n)), 0)


# --- the centre of the group algebra -------------------------------------------------


@dataclass(frozen=True)
class CenterElement:
    """sum_mu coefficients[mu] * C_mu, with C_mu the class sum of cycle type mu."""

    n: int
    coefficients: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        coeffs = {}
        for mu, v in self.coefficients.items():
            mu = Partition.from_parts(mu)
            if mu.weight != self.n:
                raise UsageError(f"class {tuple(mu)} is not a partition of {self.n}")
            v = Fraction(v)
            if v:
                coeffs[mu] = v
        object.__setattr__(self, "coefficients", dict(sorted(coeffs.items(), reverse=True)))

    @classmethod
    def class_sum(cls, mu) -> "CenterElement":
        mu = Partition.from_parts(mu)
        return cls(mu.weight, {mu: 1})

    def __getitem__(self, mu) -> Fraction:
        return self.coefficients.get(Partition.from_parts(mu), Fraction(0))

    def __add__(self, other: "CenterElement") -> "CenterElement":
        keys = set(self.coefficients) | set(other.coefficients)
        return CenterElement(self.n, {k: self[k] + other[k] for k in keys})

    def __sub__(self, other: "CenterElement") -> "CenterElement":
        return self + other.scale(-1)

    def scale(self, factor) -> "CenterElement":
        return CenterElement(self.n, {k: v * factor for k, v in self.coefficients.items()})

    def expand(self) -> dict[Images, Fraction]:
        classes = class_elements(self.n)
        return {g: v for mu, v in self.coefficients.items() for g in classes[mu]}

    @classmethod
    def collect(cls, n: int, element: Mapping[Images, Fraction]) -> "CenterElement":
        """Re-collect an explicit group-algebra element; raises if it is not central."""
        coeffs = {}
        for mu, elems in class_elements(n).items():
            values = {element.get(g, Fraction(0)) for g in elems}
            if len(values) != 1:
                raise ValueError(f"element is not central: coefficients on class {tuple(mu)} differ")
            coeffs[mu] = values.pop()
        return cls(n, coeffs)

    def __mul__(self, other: "CenterElement") -> "CenterElement":
        if self.n != other.n:
            raise UsageError("cannot multiply centre elements of different S_n")
        left, right = self.expand(), other.expand()
        out: dict[Images, Fraction] = defaultdict(Fraction)
        for x, u in left.items():
            for y, v in right.items():
                out[tuple(x[i] for i in y)] += u * v
        return CenterElement.collect(self.n, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CenterElement):
            return NotImplemented
        return self.n == other.n and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.n, tuple(self.coefficients.items())))


@dataclass(frozen=True)
class JMGenerator:
    """A symmetric function of the Jucys-Murphy elements.

    kind "e"/"h": the single e_k / h_k with k = ``degree``.
    kind "E"/"H": E(value, J) = sum_j value^j e_j(J), or H(value, J) truncated at ``degree``.
    """

    kind: Literal["e", "h", "E", "H"]
    degree: int
    value: Fraction = Fraction(1)


def _left_transposition(element: Mapping[Images, Fraction], a: int, b: int) -> dict[Images, Fraction]:
    # (a b) * y: relabel values a <-> b
    out = {}
    for y, v in element.items():
        out[tuple(b if t == a else a if t == b else t for t in y)] = v
    return out


def _apply_jm(element: Mapping[Images, Fraction], b: int) -> dict[Images, Fraction]:
    """J_b * element with J_b = sum_{a < b} (a b); 0-based b."""
    out: dict[Images, Fraction] = defaultdict(Fraction)
    for a in range(b):
        for y, v in _left_transposition(element, a, b).items():
            out[y] += v
    return out


def _add(x: Mapping[Images, Fraction], y: Mapping[Images, Fraction]) -> dict[Images, Fraction]:
    out = defaultdict(Fraction, x)
    for k, v in y.items():
        out[k] += v
    return {k: v for k, v in out.items() if v}


def _graded_action(element, n: int, kind: str, degree: int, order: Sequence[int]) -> list[dict]:
    """[g_0(J) X, ..., g_degree(J) X] for g = e or h, by running over J_b one at a time."""
    poly = [dict(element)] + [{} for _ in range(degree)]
    for b in order:
        if kind == "e":
            # (1 + w J_b): new_j = old_j + J_b old_{j-1}
            poly = [poly[0]] + [_add(poly[j], _apply_jm(poly[j - 1], b)) for j in range(1, degree + 1)]
        else:
            # (1 - z J_b)^-1: new_j = old_j + J_b new_{j-1}
            new = [poly[0]]
            for j in range(1, degree + 1):
                new.append(_add(poly[j], _apply_jm(new[j - 1], b)))
            poly = new
    return poly


def multiply_central(
    elem: CenterElement,
    generator: JMGenerator,
    *,
    cap: int = DEFAULT_BRUTE_CAP,
    order: Sequence[int] | None = None,
) -> CenterElement:
    """generator(J) * elem, computed on explicit permutations and re-collected by cycle type.

    ``order`` is the sequence (1-based) in which the commuting J_b are applied;
    any permutation of 1..n gives the same answer.
    """
    n = elem.n
    _check_cap(n, cap)
    if generator.degree < 0:
        raise UsageError("degree must be non-negative")
    order0 = [b - 1 for b in (order if order is not None else range(1, n + 1))]
    if sorted(order0) != list(range(n)):
        raise UsageError(f"order must be a permutation of 1..{n}")
    kind = generator.kind.lower()
    if kind not in ("e", "h"):
        raise UsageError(f"unknown generator kind {generator.kind!r}")
    graded = _graded_action(elem.expand(), n, kind, generator.degree, order0)
    if generator.kind in ("e", "h"):
        return CenterElement.collect(n, graded[generator.degree])
    total: dict[Images, Fraction] = {}
    for j, part in enumerate(graded):
        total = _add(total, {g: v * Fraction(generator.value) ** j for g, v in part.items()})
    return CenterElement.collect(n, total)


def idempotent(lam, *, cap: int = DEFAULT_BRUTE_CAP) -> CenterElement:
    """F_lambda = h_lambda^-1 sum_mu chi_lambda(mu) C_mu."""
    lam = Partition.parse(lam) if isinstance(lam, str) else Partition(lam)
    n = lam.weight
    _check_cap(n, cap)
    h = hook_product(lam)
    return CenterElement(n, {mu: Fraction(character(lam, mu), h) for mu in partitions_of(n)})
