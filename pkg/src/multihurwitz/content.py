"""Hypergeometric weights built from Young-diagram contents.

Parameters are exact rationals.  Any vanishing denominator raises
:class:`PoleError` naming the factor that broke.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Literal, Sequence

from .errors import PoleError, UsageError
from .partitions import Partition, contents


@dataclass(frozen=True)
class HypergeometricParams:
    q: Fraction
    w: tuple[Fraction, ...] = field(default=())
    z: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "w", tuple(Fraction(x) for x in self.w))
        object.__setattr__(self, "z", tuple(Fraction(x) for x in self.z))
        if self.q == 0:
            raise UsageError("q must be nonzero")

    @property
    def l(self) -> int:
        return len(self.w)

    @property
    def m(self) -> int:
        return len(self.z)


def _ratio(params: HypergeometricParams, j: int, *, where: str = "") -> Fraction:
    # prod_a (1 + j w_a) / prod_b (1 - j z_b), without the q
    num = prod((1 + j * wa for wa in params.w), start=Fraction(1))
    den = Fraction(1)
    for b, zb in enumerate(params.z, start=1):
        factor = 1 - j * zb
        if factor == 0:
            raise PoleError(f"pole: 1 - {j}*z_{b} = 0 (z_{b} = {zb}){where}")
        den *= factor
    return num / den


def rho(params: HypergeometricParams, j: int) -> Fraction:
    """The sequence rho_j with rho_0 = 1 whose ratios are the r_j."""
    q = params.q
    if j == 0:
        return Fraction(1)
    value = Fraction(1)
    if j > 0:
        for k in range(1, j + 1):
            value *= q * _ratio(params, k)
        return value
    for k in range(0, -j):
        num = prod((1 + k * zb for zb in params.z), start=Fraction(1))
        den = Fraction(1)
        for a, wa in enumerate(params.w, start=1):
            factor = 1 - k * wa
            if factor == 0:
                raise PoleError(f"pole: 1 - {k}*w_{a} = 0 (w_{a} = {wa}) in rho_{j}")
            den *= factor
        value *= num / (q * den)
    return value


def r_factor(params: HypergeometricParams, j: int) -> Fraction:
    """r_j = q prod_a (1 + j w_a) / prod_b (1 - j z_b)."""
    return params.q * _ratio(params, j)


def r_zero(params: HypergeometricParams, N: int) -> Fraction:
    """The lattice prefactor r_0(N) (r_0(0) = 1)."""
    if N >= 0:
        return prod((rho(params, j) for j in range(N)), start=Fraction(1))
    value = Fraction(1)
    for j in range(1, -N + 1):
        r = rho(params, -j)
        if r == 0:
            raise PoleError(f"pole: rho_{-j} vanishes in r_0({N})")
        value /= r
    return value


def content_product(params: HypergeometricParams, lam: Partition, N: int = 0) -> Fraction:
    """r_lambda(N) = r_0(N) * prod over cells of r_{N + content}."""
    value = r_zero(params, N)
    for i, j in Partition(lam).cells():
        value *= params.q * _ratio(params, N + j - i, where=f" at cell ({i},{j}) of {tuple(lam)}")
    return value


def shifted_params(params: HypergeometricParams, N: int) -> HypergeometricParams:
    """Parameters (q~, w~, z~) with content_product(p, lam, N) = r_0(N) * content_product(p~, lam, 0)."""
    for a, wa in enumerate(params.w, start=1):
        if 1 + N * wa == 0:
            raise PoleError(f"pole: 1 + {N}*w_{a} = 0 in parameter shift")
    for b, zb in enumerate(params.z, start=1):
        if 1 - N * zb == 0:
            raise PoleError(f"pole: 1 - {N}*z_{b} = 0 in parameter shift")
    return HypergeometricParams(
        q=r_factor(params, N),
        w=tuple(wa / (1 + N * wa) for wa in params.w),
        z=tuple(zb / (1 - N * zb) for zb in params.z),
    )


def rising(x, k: int):
    """Rising factorial x (x+1) ... (x+k-1)."""
    return prod((x + i for i in range(k)), start=Fraction(1) if isinstance(x, Fraction) else 1)


def pochhammer_partition(u, lam: Partition):
    """(u)_lambda = prod_i (u - i + 1)_{lambda_i}."""
    return prod((rising(u - i, part) for i, part in enumerate(lam)), start=Fraction(1))


def _power_sums(values: Sequence[int], k: int) -> list[int]:
    return [0] + [sum(v**i for v in values) for i in range(1, k + 1)]


def elementary_from_values(values: Sequence[int], k: int) -> int:
    """e_k of a multiset of integers via Newton's identities."""
    p = _power_sums(values, k)
    e = [Fraction(1)]
    for i in range(1, k + 1):
        e.append(sum(((-1) ** (t - 1) * e[i - t] * p[t] for t in range(1, i + 1)), start=Fraction(0)) / i)
    assert e[k].denominator == 1
    return int(e[k])


def complete_from_values(values: Sequence[int], k: int) -> int:
    """h_k of a multiset of integers via Newton's identities."""
    p = _power_sums(values, k)
    h = [Fraction(1)]
    for i in range(1, k + 1):
        h.append(sum((h[i - t] * p[t] for t in range(1, i + 1)), start=Fraction(0)) / i)
    assert h[k].denominator == 1
    return int(h[k])


def content_symmetric(lam: Partition, k: int, kind: Literal["elementary", "complete"]) -> int:
    """e_k or h_k evaluated on the contents of ``lam``."""
    if k < 0:
        raise UsageError(f"degree must be non-negative, got {k}")
    cont = contents(lam)
    if kind == "elementary":
        if k > len(cont):
            return 0
        return elementary_from_values(cont, k)
    if kind == "complete":
        return complete_from_values(cont, k)
    raise UsageError(f"unknown kind {kind!r}; expected 'elementary' or 'complete'")
