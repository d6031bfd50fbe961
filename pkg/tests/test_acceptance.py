"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary.
"""
import time
from fractions import Fraction
from itertools import product
from math import factorial

from multihurwitz.cayley import (
    BandSpec,
    CenterElement,
    JMGenerator,
    class_elements,
    count_cover_tuples,
    count_monotone_pairs,
    idempotent,
    monotone_pair_distribution,
    multiply_central,
)
from multihurwitz.characters import character
from multihurwitz.coefficients import (
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
from multihurwitz.content import content_symmetric
from multihurwitz.partitions import Partition, partitions_of, sign, stabilizer_order
from multihurwitz.selftest import cd_sweep
from multihurwitz.series import kp_restrict, tau_expand

K = CoefficientKey


def sweep():
    for n in range(1, 6):
        parts = partitions_of(n)
        for c, d in cd_sweep(n):
            for mu in parts:
                dist = monotone_pair_distribution(mu, BandSpec.from_cd(c, d))
                for nu in parts:
                    yield K(mu, nu, c, d), dist.get(nu, 0)


def test_1_three_way_equivalence(criterion):
    start = time.perf_counter()
    checked, bad = 0, []
    for key, paths in sweep():
        f = f_coefficient(key)
        checked += 1
        if not (f == signed_hurwitz_sum(key) and f * factorial(key.n) == paths):
            bad.append(key)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed <= 600
    criterion("1 three-way equivalence", ok, f"{checked} keys, {len(bad)} mismatches, {elapsed:.1f}s")


def test_2_frobenius_oracle(criterion):
    checked, bad = 0, []
    for n in range(1, 6):
        parts = partitions_of(n)
        for j in range(1, 5):
            for profiles in product(parts, repeat=j):
                checked += 1
                if frobenius_hurwitz(profiles) * factorial(n) != count_cover_tuples(profiles):
                    bad.append(profiles)
    criterion("2 Frobenius oracle", not bad, f"{checked} profile lists, {len(bad)} mismatches")


def test_3_series_consistency(criterion):
    caps = 3
    checked, bad = 0, []
    for l in range(3):
        for m in range(3):
            for n, table in tau_expand(l, m, 4, caps).items():
                for (mu, nu), series in table.entries.items():
                    for exps in product(range(caps + 1), repeat=l + m):
                        checked += 1
                        if series.coefficient((n,) + exps) != f_coefficient(K(mu, nu, exps[:l], exps[l:])):
                            bad.append((mu, nu, exps))
    criterion("3 series consistency", not bad, f"{checked} coefficients, {len(bad)} mismatches")


def test_4_character_suite(criterion):
    start = time.perf_counter()
    bad = []
    for n in range(1, 9):
        parts = partitions_of(n)
        chi = {(lam, mu): character(lam, mu) for lam in parts for mu in parts}
        for mu in parts:
            for nu in parts:
                s = sum(chi[(lam, mu)] * chi[(lam, nu)] for lam in parts)
                if s != (stabilizer_order(mu) if mu == nu else 0):
                    bad.append(("column", mu, nu))
        for lam in parts:
            for lam2 in parts:
                s = sum(Fraction(chi[(lam, mu)] * chi[(lam2, mu)], stabilizer_order(mu)) for mu in parts)
                if s != (lam == lam2):
                    bad.append(("row", lam, lam2))
            for mu in parts:
                if chi[(lam.conjugate(), mu)] != sign(mu) * chi[(lam, mu)]:
                    bad.append(("conjugate", lam, mu))
    for n in range(1, 11):
        ident = Partition((1,) * n)
        if sum(character(lam, ident) ** 2 for lam in partitions_of(n)) != factorial(n):
            bad.append(("burnside", n))
    elapsed = time.perf_counter() - start
    criterion("4 character suite", not bad and elapsed <= 60, f"{len(bad)} failures, {elapsed:.1f}s")


def test_5_jucys_murphy(criterion):
    bad = []
    for n in range(1, 6):
        parts = partitions_of(n)
        idem = {lam: idempotent(lam) for lam in parts}
        for lam in parts:
            for k in range(5):
                for kind, name in (("e", "elementary"), ("h", "complete")):
                    got = multiply_central(idem[lam], JMGenerator(kind, k))
                    if got != idem[lam].scale(content_symmetric(lam, k, name)):
                        bad.append((kind, lam, k))
            for lam2 in parts:
                want = idem[lam] if lam == lam2 else CenterElement(n)
                if idem[lam] * idem[lam2] != want:
                    bad.append(("idempotent", lam, lam2))
    criterion("5 Jucys-Murphy spectral suite", not bad, f"{len(bad)} failures")


def unconstrained_word_counts(mu, k):
    """Cycle types of g*t_1*...*t_k over g in cyc_mu and all transposition words."""
    n = mu.weight
    trans = [(a, b) for b in range(n) for a in range(b)]
    states = {g: 1 for g in class_elements(n)[mu]}
    for _ in range(k):
        nxt: dict = {}
        for g, mult in states.items():
            for a, b in trans:
                h = list(g)
                h[a], h[b] = h[b], h[a]
                h = tuple(h)
                nxt[h] = nxt.get(h, 0) + mult
        states = nxt
    out: dict = {}
    for g, mult in states.items():
        seen, lengths = set(), []
        for i in range(n):
            if i not in seen:
                j, size = i, 0
                while j not in seen:
                    seen.add(j)
                    j, size = g[j], size + 1
                lengths.append(size)
        nu = Partition.from_parts(lengths)
        out[nu] = out.get(nu, 0) + mult
    return out


def test_6a_double_hurwitz(criterion):
    bad = []
    for n in range(1, 6):
        for mu in partitions_of(n):
            for k in range(4):
                counts = unconstrained_word_counts(mu, k)
                for nu in partitions_of(n):
                    if double_hurwitz(mu, nu, k) != Fraction(counts.get(nu, 0), factorial(n)):
                        bad.append((mu, nu, k))
    criterion("6a all-ones strict bands = unconstrained count / n!", not bad, f"{len(bad)} mismatches")


def parity_failures(exponent):
    bad = []
    for n in range(1, 5):
        for mu in partitions_of(n):
            for nu in partitions_of(n):
                for d in range(4):
                    plus, minus = parity_split_hurwitz(mu, nu, d)
                    if f_coefficient(K(mu, nu, (), (d,))) != (-1) ** exponent(n, d) * (plus - minus):
                        bad.append((mu, nu, d))
    return bad


def test_6b_parity_split_as_stated(criterion):
    # Expected to fail for odd n; see README. Implemented faithfully, not adjusted.
    bad = parity_failures(lambda n, d: n + d)
    criterion("6b parity split F_d = (-1)^(n+d)(F+ - F-)", not bad, f"{len(bad)} mismatches, first {bad[:1]}")


def test_6b_parity_split_corrected(criterion):
    bad = parity_failures(lambda n, d: d)
    criterion("6b' parity split F_d = (-1)^d(F+ - F-)", not bad, f"{len(bad)} mismatches")


def test_6c_kp_restriction(criterion):
    checked, bad = 0, []
    for l in range(3):
        for m in range(3):
            for n, table in tau_expand(l, m, 4, 2).items():
                for (mu, exp), val in kp_restrict(table).items():
                    checked += 1
                    if val != kp_coefficient(mu, exp[1:1 + l], exp[1 + l:]):
                        bad.append((mu, exp))
    criterion("6c KP restriction", checked > 0 and not bad, f"{checked} coefficients, {len(bad)} mismatches")


def test_6d_aggregated_strict(criterion):
    bad = []
    for n in range(1, 5):
        parts = partitions_of(n)
        for mu in parts:
            for nu in parts:
                for c in range(4):
                    for l in range(1, 4):
                        direct = sum(f_coefficient(K(mu, nu, cs)) for cs in weak_compositions(c, l))
                        if aggregated_strict(mu, nu, c, l) != direct:
                            bad.append((mu, nu, c, l))
    criterion("6d aggregated strict sum", not bad, f"{len(bad)} mismatches")


def test_7_integrality(criterion):
    checked, bad = 0, []
    for key, _ in sweep():
        checked += 1
        nf = f_coefficient(key) * factorial(key.n)
        if nf.denominator != 1 or nf < 0:
            bad.append(key)
    criterion("7 integrality", not bad, f"{checked} keys, {len(bad)} failures")


def test_8_goldens(criterion):
    checks = [
        f_coefficient(K("2", "1,1", (1,))) == Fraction(1, 2),
        f_coefficient(K("3", "3", (), (2,))) == Fraction(5, 3),
        count_monotone_pairs("3", "3", BandSpec.from_cd((), (2,))) == 10,
        double_hurwitz("3", "3", 2) == 2,
        count_monotone_pairs("3", "3", BandSpec.from_cd((1, 1))) == 12,
        frobenius_hurwitz(["3", "3", "2,1"]) == 0,
        aggregated_strict("3", "3", 2, 2) == Fraction(8, 3),
    ]
    criterion("8 pinned values", all(checks), f"{sum(checks)}/{len(checks)} match")
