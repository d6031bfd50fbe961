"""Expansion coefficients F^c_d(mu, nu) of the hypergeometric tau-function.

Normalization: ``f_coefficient`` is the coefficient of q^n w^c z^d P_mu(t) P_nu(s)
in the tau-function itself, an exact rational.  The bridge to counting is

    n! * F^c_d(mu, nu) = #{(g, t_1 ... t_k) : g in cyc_mu, band-monotone t's,
                           t_1 ... t_k g in cyc_nu},

so Z_mu * F counts paths from one fixed start and Z_nu * F counts
factorizations of one fixed target.  With no transpositions this gives
delta_{mu,nu} / Z_mu, which pins the convention.

Hurwitz numbers here are the automorphism-weighted counts given by Frobenius'
character sum; they include disconnected covers.  Branch points are labelled,
so profile systems are ordered.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import prod
from typing import Iterator, Mapping, Sequence

from .characters import character
from .content import content_symmetric
from .errors import UsageError
from .partitions import (
    Partition,
    RamificationData,
    colength,
    double_genus,
    hook_product,
    partitions_of,
    stabilizer_order,
)

CoefficientKey = RamificationData


def _as_partition(p) -> Partition:
    return Partition.parse(p) if isinstance(p, str) else Partition.from_parts(p)


def _check_weights(mu: Partition, nu: Partition) -> int:
    if mu.weight != nu.weight:
        raise UsageError(f"weight mismatch: |mu|={mu.weight}, |nu|={nu.weight}")
    return mu.weight


def g_coefficient(weights: Mapping[Partition, Fraction], mu, nu) -> Fraction:
    """(Z_mu Z_nu)^-1 sum_lambda r_lambda chi_lambda(mu) chi_lambda(nu) for diagonal weights r."""
    mu, nu = _as_partition(mu), _as_partition(nu)
    n = _check_weights(mu, nu)
    total = Fraction(0)
    for lam in partitions_of(n):
        if lam not in weights:
            raise UsageError(f"no weight given for lambda = {tuple(lam)}")
        total += Fraction(weights[lam]) * character(lam, mu) * character(lam, nu)
    return total / (stabilizer_order(mu) * stabilizer_order(nu))


@lru_cache(maxsize=None)
def _e(lam: Partition, k: int) -> int:
    return content_symmetric(lam, k, "elementary")


@lru_cache(maxsize=None)
def _h(lam: Partition, k: int) -> int:
    return content_symmetric(lam, k, "complete")


def spectral_weight(lam: Partition, c: Sequence[int], d: Sequence[int]) -> int:
    """prod_a e_{c_a}(cont lam) * prod_b h_{d_b}(cont lam)."""
    return prod(_e(lam, ca) for ca in c) * prod(_h(lam, db) for db in d)


def f_coefficient(key: CoefficientKey) -> Fraction:
    """F^c_d(mu, nu) from the character sum with Jucys-Murphy content eigenvalues."""
    mu, nu, n = key.mu, key.nu, key.n
    if n < 1:
        raise UsageError("f_coefficient needs n >= 1")
    total = 0
    for lam in partitions_of(n):
        chi_mu = character(lam, mu)
        if chi_mu == 0:
            continue
        chi_nu = character(lam, nu)
        if chi_nu == 0:
            continue
        total += chi_mu * chi_nu * spectral_weight(lam, key.c, key.d)
    return Fraction(total, stabilizer_order(mu) * stabilizer_order(nu))


@lru_cache(maxsize=None)
def _frobenius(profiles: tuple[Partition, ...], base_genus: int) -> Fraction:
    n = profiles[0].weight
    exponent = len(profiles) + 2 * base_genus - 2
    zs = prod(stabilizer_order(p) for p in profiles)
    total = Fraction(0)
    for lam in partitions_of(n):
        chis = prod(character(lam, p) for p in profiles)
        if chis:
            total += Fraction(hook_product(lam)) ** exponent * chis
    return total / zs


def frobenius_hurwitz(profiles: Sequence, base_genus: int = 0) -> Fraction:
    """Hurwitz number H_{g0}(mu^(1), ..., mu^(j)) by Frobenius' character formula."""
    if not profiles:
        raise UsageError("frobenius_hurwitz needs at least one profile")
    if base_genus < 0:
        raise UsageError("base genus must be non-negative")
    parts = [_as_partition(p) for p in profiles]
    n = parts[0].weight
    if any(p.weight != n for p in parts):
        raise UsageError(f"profiles must share a weight, got {[p.weight for p in parts]}")
    if n < 1:
        raise UsageError("profiles must be nonempty partitions")
    # H is symmetric in its arguments; sort so the memo hits
    return _frobenius(tuple(sorted(parts, reverse=True)), base_genus)


@dataclass(frozen=True)
class SignedHurwitzTerm:
    """One profile system of the signed coloured expansion.

    ``profiles`` lists the strict-point profiles (trivial ones dropped) and
    then the coloured ones, colour by colour.
    """

    profiles: tuple[Partition, ...]
    colour_sizes: tuple[int, ...]
    sign: int
    value: Fraction

    @property
    def signed_value(self) -> Fraction:
        return self.sign * self.value


def _compositions(total: int, parts: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of ``total`` into ``parts`` entries in [1, max_part]."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, min(total, max_part) + 1):
        for rest in _compositions(total - first, parts - 1, max_part):
            yield (first,) + rest


def colour_sequences(n: int, d: int) -> Iterator[tuple[Partition, ...]]:
    """Ordered sequences of non-identity partitions of n whose colengths add up to d."""
    if d == 0:
        yield ()
        return
    by_colength = {c: [p for p in partitions_of(n) if colength(p) == c] for c in range(1, n)}
    for j in range(1, d + 1):
        for comp in _compositions(d, j, n - 1):
            yield from product(*(by_colength[c] for c in comp))


def strict_choices(n: int, c: int) -> list[tuple[Partition, ...]]:
    # c = 0 is the trivial profile, which leaves H unchanged and is dropped
    if c == 0:
        return [()]
    return [(p,) for p in partitions_of(n) if colength(p) == c]


def signed_hurwitz_terms(key: CoefficientKey) -> Iterator[SignedHurwitzTerm]:
    """Every profile system contributing to F^c_d(mu, nu), with its sign (-1)^(C + D)."""
    n = key.n
    if n < 1:
        raise UsageError("signed_hurwitz_terms needs n >= 1")
    D = sum(key.d)
    strict = [strict_choices(n, ca) for ca in key.c]
    colours = [list(colour_sequences(n, db)) for db in key.d]
    for s in product(*strict):
        strict_profiles = tuple(p for group in s for p in group)
        for cs in product(*colours):
            sizes = tuple(len(seq) for seq in cs)
            coloured = tuple(p for seq in cs for p in seq)
            C = sum(sizes)
            value = frobenius_hurwitz((key.mu, key.nu) + strict_profiles + coloured)
            yield SignedHurwitzTerm(strict_profiles + coloured, sizes, (-1) ** ((C + D) % 2), value)


def signed_hurwitz_sum(key: CoefficientKey) -> Fraction:
    """F^c_d(mu, nu) assembled as a signed sum of ordinary Hurwitz numbers."""
    return sum((t.signed_value for t in signed_hurwitz_terms(key)), start=Fraction(0))


def double_hurwitz(mu, nu, k: int) -> Fraction:
    """Double Hurwitz number: k simple branch points besides 0 and infinity."""
    return f_coefficient(CoefficientKey(mu, nu, (1,) * k, ()))


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def aggregated_strict(mu, nu, c: int, l: int) -> Fraction:
    """F^{(c,l)}: sum of F^{(c_1..c_l)} over all (c_1..c_l) adding up to c."""
    if l < 1:
        raise UsageError("l must be positive")
    mu, nu = _as_partition(mu), _as_partition(nu)
    _check_weights(mu, nu)
    return sum((f_coefficient(CoefficientKey(mu, nu, cs, ())) for cs in weak_compositions(c, l)), start=Fraction(0))


def kp_coefficient(mu, c: Sequence[int] = (), d: Sequence[int] = ()) -> Fraction:
    """F^c_d(mu, (1^n)): the coefficient surviving when s is set to t_infinity."""
    mu = _as_partition(mu)
    return f_coefficient(CoefficientKey(mu, Partition((1,) * mu.weight), tuple(c), tuple(d)))


def parity_split_hurwitz(mu, nu, d: int) -> tuple[Fraction, Fraction]:
    """(F+, F-) for a single colour of total colength d.

    F+ (F-) adds up the Hurwitz numbers of profile systems whose total number
    of branch points, counting the pair over 0 and infinity, is even (odd).
    They satisfy F_d(mu, nu) = (-1)^d (F+ - F-).
    """
    key = CoefficientKey(mu, nu, (), (d,))
    plus, minus = Fraction(0), Fraction(0)
    for term in signed_hurwitz_terms(key):
        if (2 + sum(term.colour_sizes)) % 2 == 0:
            plus += term.value
        else:
            minus += term.value
    return plus, minus


__all__ = [
    "CoefficientKey",
    "SignedHurwitzTerm",
    "aggregated_strict",
    "colour_sequences",
    "double_genus",
    "double_hurwitz",
    "f_coefficient",
    "frobenius_hurwitz",
    "g_coefficient",
    "kp_coefficient",
    "parity_split_hurwitz",
    "signed_hurwitz_sum",
    "signed_hurwitz_terms",
    "spectral_weight",
]
