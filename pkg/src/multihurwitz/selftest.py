"""Self-verification sweeps.

Each suite checks one family of identities over a finite range and reports
how many instances it checked plus the failing keys.  ``quick`` covers roughly
n <= 4; ``full`` is the acceptance range.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Callable, Iterator

from .cayley import (
    BandSpec,
    CenterElement,
    JMGenerator,
    count_cover_tuples,
    idempotent,
    monotone_pair_distribution,
    multiply_central,
)
from .characters import character
from .coefficients import (
    CoefficientKey,
    aggregated_strict,
    double_hurwitz,
    f_coefficient,
    frobenius_hurwitz,
    kp_coefficient,
    parity_split_hurwitz,
    signed_hurwitz_sum,
    weak_compositions,
)
from .content import content_symmetric
from .partitions import (
    Partition,
    class_size,
    contents,
    dimension,
    hook_product,
    partitions_of,
    sign,
    stabilizer_order,
)
from .series import kp_restrict, tau_expand

MAX_REPORTED_FAILURES = 20


@dataclass
class SuiteResult:
    name: str
    instances: int = 0
    failures: list[dict] = field(default_factory=list)
    failure_count: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def check(self, ok: bool, **detail) -> None:
        self.instances += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append({k: _jsonable(v) for k, v in detail.items()})

    def to_json(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        return out


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, Partition):
        return str(v)
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    return v


SCOPES = {
    "quick": dict(equiv_n=4, char_n=6, burnside_n=8, frob_n=4, frob_len=3, series_n=3, jm_n=4, jm_k=3, cor_n=3),
    "full": dict(equiv_n=5, char_n=8, burnside_n=10, frob_n=5, frob_len=4, series_n=4, jm_n=5, jm_k=4, cor_n=4),
}


def cd_sweep(n: int, max_total: int = 4, max_l: int = 2, max_m: int = 2) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (c, d) with len(c) <= max_l, len(d) <= max_m, sum <= max_total and each c_a <= n - 1."""
    for l in range(max_l + 1):
        for m in range(max_m + 1):
            for total in range(max_total + 1):
                if l + m == 0:
                    if total == 0:
                        yield (), ()
                    continue
                for vec in weak_compositions(total, l + m):
                    c, d = vec[:l], vec[l:]
                    if all(ca <= n - 1 for ca in c):
                        yield c, d


def suite_partitions(p) -> SuiteResult:
    res = SuiteResult("partition-core")
    for n in range(0, 31):
        total = sum(class_size(mu) for mu in partitions_of(n))
        res.check(total == factorial(n), invariant="class sizes sum to n!", n=n, got=total)
    for n in range(1, p["burnside_n"] + 1):
        total = sum(dimension(lam) ** 2 for lam in partitions_of(n))
        res.check(total == factorial(n), invariant="Burnside", n=n, got=total)
    for n in range(0, 13):
        for lam in partitions_of(n):
            closed = sum(part * (part - 2 * i + 1) for i, part in enumerate(lam, start=1)) // 2
            res.check(sum(contents(lam)) == closed, invariant="content sum", lam=lam)
            if n:
                res.check(hook_product(lam) * dimension(lam) == factorial(n), invariant="hook*dim", lam=lam)
    return res


def suite_characters(p) -> SuiteResult:
    res = SuiteResult("character-orthogonality")
    for n in range(1, p["char_n"] + 1):
        parts = partitions_of(n)
        chi = {(lam, mu): character(lam, mu) for lam in parts for mu in parts}
        for mu in parts:
            for nu in parts:
                s = sum(chi[(lam, mu)] * chi[(lam, nu)] for lam in parts)
                want = stabilizer_order(mu) if mu == nu else 0
                res.check(s == want, invariant="first orthogonality", n=n, mu=mu, nu=nu, got=s, want=want)
        for lam in parts:
            for lam2 in parts:
                s = sum(Fraction(chi[(lam, mu)] * chi[(lam2, mu)], stabilizer_order(mu)) for mu in parts)
                res.check(s == (lam == lam2), invariant="second orthogonality", n=n, lam=lam, lam2=lam2, got=s)
        for lam in parts:
            got = chi[(lam, Partition((1,) * n))]
            res.check(got == dimension(lam), invariant="degree equals dimension", n=n, lam=lam, got=got)
        for lam in parts:
            conj = lam.conjugate()
            for mu in parts:
                ok = chi[(conj, mu)] == sign(mu) * chi[(lam, mu)]
                res.check(ok, invariant="conjugate sign rule", n=n, lam=lam, mu=mu)
    for n in range(1, p["burnside_n"] + 1):
        total = sum(character(lam, (1,) * n) ** 2 for lam in partitions_of(n))
        res.check(total == factorial(n), invariant="Burnside via characters", n=n, got=total)
    return res


def suite_three_way(p) -> SuiteResult:
    res = SuiteResult("three-way-equivalence")
    for n in range(1, p["equiv_n"] + 1):
        parts = partitions_of(n)
        for c, d in cd_sweep(n):
            bands = BandSpec.from_cd(c, d)
            for mu in parts:
                dist = monotone_pair_distribution(mu, bands)
                for nu in parts:
                    key = CoefficientKey(mu, nu, c, d)
                    f = f_coefficient(key)
                    s = signed_hurwitz_sum(key)
                    count = dist.get(nu, 0)
                    nf = f * factorial(n)
                    res.check(
                        f == s and nf == count and nf.denominator == 1 and nf >= 0,
                        mu=mu, nu=nu, c=c, d=d, spectral=f, signed=s, paths=count,
                    )
    return res


def suite_frobenius(p) -> SuiteResult:
    res = SuiteResult("frobenius-oracle")
    for n in range(1, p["frob_n"] + 1):
        parts = partitions_of(n)
        for j in range(1, p["frob_len"] + 1):
            for profiles in product(parts, repeat=j):
                if list(profiles) != sorted(profiles, reverse=True):
                    continue  # H and the tuple count are both symmetric
                h = frobenius_hurwitz(profiles)
                count = count_cover_tuples(profiles)
                res.check(h * factorial(n) == count, profiles=list(profiles), H=h, tuples=count)
    return res


def suite_series(p) -> SuiteResult:
    res = SuiteResult("series-consistency")
    caps = 3
    for l in range(3):
        for m in range(3):
            tables = tau_expand(l, m, p["series_n"], caps)
            for n, table in tables.items():
                for (mu, nu), series in table.entries.items():
                    for exps in product(range(caps + 1), repeat=l + m):
                        c, d = exps[:l], exps[l:]
                        got = series.coefficient((n,) + exps)
                        want = f_coefficient(CoefficientKey(mu, nu, c, d))
                        res.check(got == want, mu=mu, nu=nu, c=c, d=d, series=got, spectral=want)
    return res


def suite_jucys_murphy(p) -> SuiteResult:
    res = SuiteResult("jucys-murphy-spectral")
    for n in range(1, p["jm_n"] + 1):
        parts = partitions_of(n)
        idem = {lam: idempotent(lam) for lam in parts}
        for lam in parts:
            for k in range(p["jm_k"] + 1):
                for kind, name in (("e", "elementary"), ("h", "complete")):
                    got = multiply_central(idem[lam], JMGenerator(kind, k))
                    want = idem[lam].scale(content_symmetric(lam, k, name))
                    res.check(got == want, invariant=f"{kind}_k eigenvalue", lam=lam, k=k)
        for lam in parts:
            for lam2 in parts:
                prod_ = idem[lam] * idem[lam2]
                want = idem[lam] if lam == lam2 else CenterElement(n)
                res.check(prod_ == want, invariant="idempotency", lam=lam, lam2=lam2)
    return res


def suite_corollaries(p) -> SuiteResult:
    res = SuiteResult("corollaries")
    for n in range(1, p["equiv_n"] + 1):
        parts = partitions_of(n)
        for k in range(4):
            bands = BandSpec.from_cd((1,) * k)
            for mu in parts:
                dist = monotone_pair_distribution(mu, bands)
                for nu in parts:
                    ok = double_hurwitz(mu, nu, k) * factorial(n) == dist.get(nu, 0)
                    res.check(ok, invariant="double Hurwitz", mu=mu, nu=nu, k=k)
    for n in range(1, p["cor_n"] + 1):
        parts = partitions_of(n)
        for mu in parts:
            for nu in parts:
                for d in range(4):
                    plus, minus = parity_split_hurwitz(mu, nu, d)
                    f = f_coefficient(CoefficientKey(mu, nu, (), (d,)))
                    res.check(f == (-1) ** d * (plus - minus), invariant="parity split", mu=mu, nu=nu, d=d)
                for c in range(4):
                    for l in range(1, 4):
                        direct = sum(
                            (f_coefficient(CoefficientKey(mu, nu, cs, ())) for cs in weak_compositions(c, l)),
                            start=Fraction(0),
                        )
                        res.check(aggregated_strict(mu, nu, c, l) == direct, invariant="aggregated", mu=mu, nu=nu, c=c, l=l)
    for l in range(3):
        for m in range(3):
            for n, table in tau_expand(l, m, p["cor_n"], 2).items():
                for (mu, exp), val in kp_restrict(table).items():
                    c, d = exp[1:1 + l], exp[1 + l:]
                    res.check(val == kp_coefficient(mu, c, d), invariant="KP restriction", mu=mu, c=c, d=d)
    return res


SUITES: dict[str, Callable[[dict], SuiteResult]] = {
    "partition-core": suite_partitions,
    "character-orthogonality": suite_characters,
    "three-way-equivalence": suite_three_way,
    "frobenius-oracle": suite_frobenius,
    "series-consistency": suite_series,
    "jucys-murphy-spectral": suite_jucys_murphy,
    "corollaries": suite_corollaries,
}


def _run_one(args: tuple[str, str]) -> SuiteResult:
    name, scope = args
    return SUITES[name](SCOPES[scope])


def run_selftest(scope: str = "quick", suites=None, workers: int = 1) -> list[SuiteResult]:
    """Run the requested suites; results come back sorted by suite name."""
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; expected one of {sorted(SCOPES)}")
    names = list(suites or SUITES)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, [(name, scope) for name in names]))
    else:
        results = [_run_one((name, scope)) for name in names]
    return sorted(results, key=lambda r: r.name)
