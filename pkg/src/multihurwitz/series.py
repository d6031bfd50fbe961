"""Truncated expansion of the hypergeometric tau-function in the power-sum basis.

The tau-function is held only as its table of coefficients of
P_mu(t) P_nu(s), each a truncated polynomial in (q, w_1..w_l, z_1..z_m).
Exponent vectors are ordered (e_q, e_w1, ..., e_wl, e_z1, ..., e_zm).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Sequence

from .characters import character
from .errors import TruncationError, UsageError
from .partitions import Partition, contents, hook_product, partitions_of, stabilizer_order
from .content import pochhammer_partition


@dataclass
class TruncatedSeries:
    """Sparse polynomial with exact coefficients, pruned at per-variable degree caps."""

    caps: tuple[int, ...]
    terms: dict[tuple[int, ...], Fraction] = field(default_factory=dict)

    @classmethod
    def one(cls, caps: Sequence[int]) -> "TruncatedSeries":
        return cls(tuple(caps), {(0,) * len(caps): Fraction(1)})

    @classmethod
    def from_terms(cls, caps: Sequence[int], terms: Iterable[tuple[Sequence[int], object]]) -> "TruncatedSeries":
        s = cls(tuple(caps))
        for exp, val in terms:
            exp = tuple(exp)
            if all(e <= c for e, c in zip(exp, s.caps)) and val:
                s.terms[exp] = s.terms.get(exp, Fraction(0)) + Fraction(val)
        s.terms = {k: v for k, v in s.terms.items() if v}
        return s

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return TruncatedSeries(self.caps, {k: v for k, v in out.items() if v})

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            factor = Fraction(other)
            return TruncatedSeries(self.caps, {k: v * factor for k, v in self.terms.items() if v * factor})
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
        caps = self.caps
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                if all(e <= c for e, c in zip(exp, caps)):
                    out[exp] += v1 * v2
        return TruncatedSeries(caps, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def _check(self, other: "TruncatedSeries") -> None:
        if self.caps != other.caps:
            raise UsageError(f"cannot combine series with caps {self.caps} and {other.caps}")

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        exp = tuple(exp)
        if len(exp) != len(self.caps):
            raise UsageError(f"exponent vector {exp} has the wrong length (expected {len(self.caps)})")
        over = [(i, e, c) for i, (e, c) in enumerate(zip(exp, self.caps)) if e > c]
        if over:
            i, e, c = over[0]
            raise TruncationError(f"exponent {e} of variable {i} exceeds the series cap {c}; rebuild with larger caps")
        return self.terms.get(exp, Fraction(0))


def schur_to_powersum(lam) -> dict[Partition, Fraction]:
    """Coefficients chi_lambda(mu) / Z_mu of S_lambda in the power-sum basis."""
    lam = Partition.parse(lam) if isinstance(lam, str) else Partition(lam)
    return {mu: Fraction(character(lam, mu), stabilizer_order(mu)) for mu in partitions_of(lam.weight)}


def _normalize_caps(l: int, m: int, n_max: int, caps) -> tuple[int, ...]:
    if isinstance(caps, int):
        var_caps = (caps,) * (l + m)
    else:
        var_caps = tuple(int(c) for c in caps)
        if len(var_caps) == 1:
            var_caps = var_caps * (l + m)
        if len(var_caps) != l + m:
            raise UsageError(f"expected {l + m} degree caps (one per w and z variable), got {len(var_caps)}")
    if any(c < 0 for c in var_caps):
        raise UsageError("degree caps must be non-negative")
    return (n_max,) + var_caps


def content_weight_series(lam: Partition, l: int, m: int, caps: Sequence[int]) -> TruncatedSeries:
    """q^|lam| prod_a prod_cells (1 + w_a c) prod_b prod_cells (1 - z_b c)^-1, truncated."""
    nvars = 1 + l + m
    q_exp = [0] * nvars
    q_exp[0] = lam.weight
    series = TruncatedSeries.from_terms(caps, [(q_exp, 1)])
    cont = contents(lam)
    for a in range(l):
        for c in cont:
            if c == 0:
                continue
            e = [0] * nvars
            e[1 + a] = 1
            series = series * TruncatedSeries.from_terms(caps, [((0,) * nvars, 1), (e, c)])
    for b in range(m):
        cap = caps[1 + l + b]
        for c in cont:
            if c == 0:
                continue
            geo = []
            for k in range(cap + 1):
                e = [0] * nvars
                e[1 + l + b] = k
                geo.append((e, Fraction(c) ** k))
            series = series * TruncatedSeries.from_terms(caps, geo)
    return series


@dataclass
class PowerSumTable:
    """Coefficients of P_mu(t) P_nu(s) at fixed weight n, as truncated series."""

    n: int
    l: int
    m: int
    caps: tuple[int, ...]
    entries: dict[tuple[Partition, Partition], TruncatedSeries]

    def coefficient(self, mu, nu, c: Sequence[int] = (), d: Sequence[int] = ()) -> Fraction:
        mu = Partition.parse(mu) if isinstance(mu, str) else Partition.from_parts(mu)
        nu = Partition.parse(nu) if isinstance(nu, str) else Partition.from_parts(nu)
        if len(c) != self.l or len(d) != self.m:
            raise UsageError(f"table has l={self.l}, m={self.m}; got c={tuple(c)}, d={tuple(d)}")
        if (mu, nu) not in self.entries:
            raise UsageError(f"no entry for mu={tuple(mu)}, nu={tuple(nu)} at n={self.n}")
        return self.entries[(mu, nu)].coefficient((self.n,) + tuple(c) + tuple(d))

    def to_json(self) -> dict:
        entries = []
        for (mu, nu), series in self.entries.items():
            coeffs = [{"exp": list(e), "val": str(v)} for e, v in sorted(series.terms.items())]
            entries.append({"mu": str(mu), "nu": str(nu), "coeffs": coeffs})
        return {"n": self.n, "l": self.l, "m": self.m, "caps": list(self.caps), "entries": entries}

    @classmethod
    def from_json(cls, payload: dict) -> "PowerSumTable":
        caps = tuple(payload["caps"])
        entries = {}
        for entry in payload["entries"]:
            key = (Partition.parse(entry["mu"]), Partition.parse(entry["nu"]))
            entries[key] = TruncatedSeries.from_terms(caps, [(c["exp"], Fraction(c["val"])) for c in entry["coeffs"]])
        return cls(int(payload["n"]), int(payload["l"]), int(payload["m"]), caps, entries)


def tau_expand(l: int, m: int, n_max: int, caps=3) -> dict[int, PowerSumTable]:
    """Power-sum coefficient tables of tau^{(q,w,z)}(t, s) for 1 <= n <= n_max.

    ``caps`` is either one degree cap shared by all w and z variables or one
    cap per variable (w's first).
    """
    if l < 0 or m < 0 or n_max < 1:
        raise UsageError("need l, m >= 0 and n_max >= 1")
    full_caps = _normalize_caps(l, m, n_max, caps)
    tables = {}
    for n in range(1, n_max + 1):
        parts = partitions_of(n)
        entries = {(mu, nu): TruncatedSeries(full_caps) for mu in parts for nu in parts}
        for lam in parts:
            weight = content_weight_series(lam, l, m, full_caps)
            chis = {mu: character(lam, mu) for mu in parts}
            for mu in parts:
                if not chis[mu]:
                    continue
                for nu in parts:
                    if not chis[nu]:
                        continue
                    scale = Fraction(chis[mu] * chis[nu], stabilizer_order(mu) * stabilizer_order(nu))
                    entries[(mu, nu)] = entries[(mu, nu)] + weight * scale
        tables[n] = PowerSumTable(n, l, m, full_caps, entries)
    return tables


SpecialKind = Literal["schur_at_t_infinity", "schur_at_t_u", "powersum_at_t_u", "powersum_at_t_infinity"]


def evaluate_special(kind: SpecialKind, part, u=None) -> Fraction:
    """Schur or power-sum functions at t_inf = (1, 0, 0, ...) or t(u) = (u, u/2, u/3, ...)."""
    p = Partition.parse(part) if isinstance(part, str) else Partition.from_parts(part)
    if kind in ("schur_at_t_u", "powersum_at_t_u"):
        if u is None:
            raise UsageError(f"{kind} needs a value for u")
        u = Fraction(u)
    if kind == "schur_at_t_infinity":
        return Fraction(1, hook_product(p)) if p else Fraction(1)
    if kind == "schur_at_t_u":
        return pochhammer_partition(u, p) / (hook_product(p) if p else 1)
    if kind == "powersum_at_t_u":
        return u ** len(p)
    if kind == "powersum_at_t_infinity":
        return Fraction(1) if all(x == 1 for x in p) else Fraction(0)
    raise UsageError(f"unknown special evaluation {kind!r}")


def kp_restrict(table: PowerSumTable) -> dict[tuple[Partition, tuple[int, ...]], Fraction]:
    """Set s = t_inf: keep the nu = (1^n) column, keyed by (mu, exponent vector)."""
    ones = Partition((1,) * table.n)
    out = {}
    for (mu, nu), series in table.entries.items():
        if nu != ones:
            continue
        for exp, val in sorted(series.terms.items()):
            out[(mu, exp)] = val
    return out
