from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import prod

import pytest
from hypothesis import assume, given, settings, strategies as st

from multihurwitz.content import (
    HypergeometricParams,
    content_product,
    content_symmetric,
    pochhammer_partition,
    r_factor,
    r_zero,
    rho,
    shifted_params,
)
from multihurwitz.errors import PoleError, UsageError
from multihurwitz.partitions import Partition, contents, partitions_of

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=7)
nonzero = rationals.filter(lambda x: x != 0)
params_st = st.builds(
    HypergeometricParams,
    q=nonzero,
    w=st.lists(rationals, max_size=2).map(tuple),
    z=st.lists(rationals, max_size=2).map(tuple),
)

q, w1, z1 = Fraction(2), Fraction(1, 3), Fraction(1, 5)
P11 = HypergeometricParams(q, (w1,), (z1,))


def test_rho_examples():
    assert rho(P11, 0) == 1
    assert rho(P11, 1) == q * (1 + w1) / (1 - z1)
    assert rho(P11, -1) == 1 / q


def test_r_factor_examples():
    assert r_factor(P11, 0) == q
    assert r_factor(P11, 2) == q * (1 + 2 * w1) / (1 - 2 * z1)
    assert r_factor(HypergeometricParams(q, (w1,)), -1) == q * (1 - w1)


def test_content_product_examples():
    assert content_product(P11, Partition((1,))) == q
    assert content_product(P11, Partition((2,))) == q**2 * (1 + w1) / (1 - z1)
    assert content_product(P11, Partition(), 0) == 1
    assert content_product(P11, Partition(), 3) == r_zero(P11, 3)


def test_r_zero_matches_closed_forms():
    # r_0(N) = q^{N(N-1)/2} prod_j f(N-j)^j and r_0(-N) = q^{N(N+1)/2} prod_j g(N-j)^j
    w, z = Fraction(2, 7), Fraction(1, 5)
    params = HypergeometricParams(q, (w,), (z,))
    f = lambda k: (1 + k * w) / (1 - k * z)
    g = lambda k: (1 - k * w) / (1 + k * z)
    for N in range(1, 5):
        assert r_zero(params, N) == q ** (N * (N - 1) // 2) * prod((f(N - j) ** j for j in range(1, N)), start=Fraction(1))
        assert r_zero(params, -N) == q ** (N * (N + 1) // 2) * prod((g(N - j) ** j for j in range(1, N + 1)), start=Fraction(1))


def test_poles_are_named():
    bad = HypergeometricParams(1, (), (Fraction(1, 2),))
    with pytest.raises(PoleError, match="z_1"):
        r_factor(bad, 2)
    with pytest.raises(PoleError, match=r"cell \(1,3\)"):
        content_product(bad, Partition((3,)))
    with pytest.raises(PoleError, match="w_1"):
        rho(HypergeometricParams(1, (Fraction(1),)), -2)
    with pytest.raises(UsageError):
        HypergeometricParams(0)


def test_pochhammer_examples():
    u = Fraction(7, 3)
    assert pochhammer_partition(u, Partition((1,))) == u
    assert pochhammer_partition(u, Partition((2, 1))) == u * (u + 1) * (u - 1)
    assert pochhammer_partition(Fraction(1), Partition((1, 1))) == 0


def brute_e(values, k):
    return sum(prod(c) for c in combinations(values, k))


def brute_h(values, k):
    return sum(prod(c) for c in combinations_with_replacement(values, k))


def test_content_symmetric_examples():
    assert content_symmetric(Partition((2, 1)), 1, "elementary") == 0
    assert content_symmetric(Partition((2,)), 2, "complete") == 1
    assert content_symmetric(Partition((3,)), 2, "elementary") == 2
    assert content_symmetric(Partition((2,)), 5, "elementary") == 0
    assert content_symmetric(Partition((2,)), 0, "complete") == 1
    with pytest.raises(UsageError):
        content_symmetric(Partition((2,)), 1, "power")


@pytest.mark.parametrize("lam", [p for n in range(1, 7) for p in partitions_of(n)])
def test_content_symmetric_against_enumeration(lam):
    cont = contents(lam)
    for k in range(0, 6):
        assert content_symmetric(lam, k, "elementary") == brute_e(cont, k)
        assert content_symmetric(lam, k, "complete") == brute_h(cont, k)


@given(params_st, st.integers(-6, 6))
def test_telescoping(params, j):
    try:
        lhs = rho(params, j) / rho(params, j - 1)
        rhs = r_factor(params, j)
    except (PoleError, ZeroDivisionError):
        assume(False)
    assert lhs == rhs


@settings(max_examples=50)
@given(params_st)
def test_factorized_form(params):
    for n in range(0, 7):
        for lam in partitions_of(n):
            cont = contents(lam)
            dens = [1 - zb * c for zb in params.z for c in cont]
            if any(x == 0 for x in dens):
                continue
            expected = params.q ** n * prod((1 + wa * c for wa in params.w for c in cont), start=Fraction(1))
            expected /= prod(dens, start=Fraction(1))
            assert content_product(params, lam, 0) == expected


@given(nonzero)
def test_pochhammer_content_identity(wv):
    for n in range(0, 7):
        for lam in partitions_of(n):
            lhs = prod((1 + wv * c for c in contents(lam)), start=Fraction(1))
            assert lhs == wv**n * pochhammer_partition(1 / wv, lam)


@settings(max_examples=60)
@given(params_st, st.sampled_from([-2, -1, 1, 2]))
def test_n_shift(params, N):
    for n in range(0, 5):
        for lam in partitions_of(n):
            try:
                lhs = content_product(params, lam, N)
                rhs = r_zero(params, N) * content_product(shifted_params(params, N), lam, 0)
            except (PoleError, ZeroDivisionError):
                continue
            assert lhs == rhs


@given(rationals, st.integers(0, 6))
def test_generating_functions(x, k):
    # sum_k e_k x^k = prod (1 + x c); sum_k h_k x^k agrees with the geometric product to order k
    for lam in partitions_of(4):
        cont = contents(lam)
        e_sum = sum(content_symmetric(lam, i, "elementary") * x**i for i in range(len(cont) + 1))
        assert e_sum == prod((1 + x * c for c in cont), start=Fraction(1))
        # coefficient extraction from the truncated product of geometric series
        series = {0: Fraction(1)}
        for c in cont:
            new = {}
            for deg, v in series.items():
                for j in range(0, k - deg + 1):
                    new[deg + j] = new.get(deg + j, 0) + v * Fraction(c) ** j
            series = new
        assert series.get(k, 0) == content_symmetric(lam, k, "complete")
