import itertools
from fractions import Fraction
from math import factorial, gcd, prod

import pytest
from hypothesis import given, settings, strategies as st

from ppdiamond.cyclotomic import NotRational
from ppdiamond.errors import BudgetExceeded
from ppdiamond.oracles import restricted_series
from ppdiamond.partition import (
    PartSequence,
    partition_count_dp,
    partition_count_explicit,
    partition_counts_dp,
    polynomial_part_bernoulli,
    polynomial_part_product,
    quasipoly_from_moments,
    residue_moments,
    sylvester_wave,
    wave_set,
)

F = Fraction
MACMAHON = PartSequence.of(1, 2, 2, 3)


def _mobius(n):
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def ramanujan_sum(j, x):
    g = gcd(x, j)
    return sum(_mobius(j // d) * d for d in range(1, g + 1) if g % d == 0)


def wave_by_brute_force(a, j, n):
    """Walk the whole box, weighting each tuple by the Ramanujan sum c_j(s - n)."""
    total = F(0)
    for values in itertools.product(*(range(0, a.D, x) for x in a.parts)):
        s = sum(values)
        term = F(ramanujan_sum(j, s - n))
        for ell in range(1, a.r):
            term *= F(n - s, a.D) + ell
        total += term
    return total / (a.D * factorial(a.r - 1))


# --- PartSequence ------------------------------------------------------------


def test_part_sequence_defaults_and_validation():
    assert MACMAHON.D == 6 and MACMAHON.r == 4
    assert PartSequence.of(1, 2, D=12).D == 12
    with pytest.raises(ValueError):
        PartSequence(())
    with pytest.raises(ValueError):
        PartSequence.of(0, 2)
    with pytest.raises(ValueError):
        PartSequence.of(2, 3, D=9)


# --- counts ------------------------------------------------------------------


@pytest.mark.parametrize(
    "parts,n,expected", [((1, 2, 2, 3), 0, 1), ((1, 2, 2, 3), 6, 14), ((1,), 5, 1)]
)
def test_dp_examples(parts, n, expected):
    assert partition_count_dp(PartSequence(parts), n) == expected


def test_dp_negative_is_zero():
    assert partition_count_dp(MACMAHON, -3) == 0


@pytest.mark.parametrize(
    "parts,n,expected", [((1, 2, 2, 3), 6, 14), ((1, 2, 2, 3), 0, 1), ((1, 2), 7, 4)]
)
def test_explicit_examples(parts, n, expected):
    assert partition_count_explicit(PartSequence(parts), n) == expected


def test_explicit_refuses_over_budget():
    big = PartSequence.of(1, 2, 3, 2, 5, 6, 7)
    with pytest.raises(BudgetExceeded):
        partition_count_explicit(big, 10)
    with pytest.raises(BudgetExceeded):
        partition_count_explicit(MACMAHON, 10, budget=107)


# --- residue moments ---------------------------------------------------------


def test_residue_moments_examples():
    assert residue_moments(PartSequence.of(1, 2), 1).S == ((1, 0), (1, 1))
    assert residue_moments(PartSequence.of(1), 0).S == ((1,),)
    assert residue_moments(MACMAHON, 0).total(0) == 108


def test_residue_moments_rejects_large_pmax():
    with pytest.raises(ValueError):
        residue_moments(PartSequence.of(1, 2), 3)


# --- quasi-polynomial --------------------------------------------------------


def test_quasipoly_examples():
    q = quasipoly_from_moments(PartSequence.of(1, 2))
    assert q.coeffs == ((F(1), F(1, 2)), (F(1, 2), F(1, 2)))
    assert quasipoly_from_moments(PartSequence.of(1)).coeffs == ((F(1),),)
    assert quasipoly_from_moments(MACMAHON).count(6) == 14


@pytest.mark.parametrize("parts", [(1,), (1, 1), (1, 2), (1, 3), (1, 2, 2, 3), (2, 3, 4)])
def test_quasipoly_leading_coefficient(parts):
    a = PartSequence(parts)
    q = quasipoly_from_moments(a)
    assert q.degree == a.r - 1
    lead = F(1, factorial(a.r - 1) * prod(parts))
    assert set(q.leading_coefficients()) == {lead}


# --- polynomial part ---------------------------------------------------------


def test_polynomial_part_examples():
    assert polynomial_part_product(PartSequence.of(1)) == (F(1),)
    assert polynomial_part_product(PartSequence.of(1, 2)) == (F(3, 4), F(1, 2))
    assert polynomial_part_product(MACMAHON)[3] == F(1, 72)
    assert polynomial_part_bernoulli(PartSequence.of(1)) == (F(1),)
    assert polynomial_part_bernoulli(PartSequence.of(1, 1)) == (F(1), F(1))
    assert polynomial_part_bernoulli(MACMAHON) == polynomial_part_product(MACMAHON)


def test_polynomial_part_is_average_of_branches():
    a = PartSequence.of(1, 2, 3)
    q = quasipoly_from_moments(a)
    avg = tuple(sum(row[m] for row in q.coeffs) / q.period for m in range(q.degree + 1))
    assert polynomial_part_product(a) == avg


# --- waves -------------------------------------------------------------------


def test_wave_examples():
    a12 = PartSequence.of(1, 2)
    assert sylvester_wave(a12, 1).coeffs == ((F(3, 4), F(1, 2)),)
    w2 = sylvester_wave(a12, 2)
    assert [w2.value(n) for n in range(4)] == [F(1, 4), F(-1, 4)] * 2
    w3 = sylvester_wave(PartSequence.of(1, 3), 3)
    assert [w3.value(n) for n in range(3)] == [F(1, 3), F(0), F(-1, 3)]


def test_wave_set_examples():
    ws = wave_set(MACMAHON)
    assert sorted(ws.waves) == [1, 2, 3]
    assert ws.value(6) == 14
    one = wave_set(PartSequence.of(1))
    assert list(one.waves) == [1] and one.waves[1].coeffs == ((F(1),),)


def test_wave_requires_divisor():
    with pytest.raises(ValueError):
        sylvester_wave(MACMAHON, 5)


@pytest.mark.parametrize("parts", [(1, 2), (1, 3), (1, 2, 2, 3), (2, 3), (1, 4, 6)])
def test_corrected_wave_matches_ramanujan_sum_oracle(parts):
    a = PartSequence(parts)
    for j in a.divisors():
        w = sylvester_wave(a, j)
        assert all(w.value(n) == wave_by_brute_force(a, j, n) for n in range(2 * j + 3))


def test_printed_wave_is_constant_and_breaks_the_sum():
    a = PartSequence.of(1, 2)
    printed = sylvester_wave(a, 2, variant="printed")
    assert printed.coeffs == ((F(1, 4),), (F(1, 4),))
    ws = wave_set(a, variant="printed")
    assert any(ws.value(n) != partition_count_dp(a, n) for n in range(6))


def test_single_conjugate_wave_is_only_rational_for_small_j():
    a = PartSequence.of(1, 2)
    assert sylvester_wave(a, 2, variant="single") == sylvester_wave(a, 2)
    with pytest.raises(NotRational):
        sylvester_wave(PartSequence.of(1, 3), 3, variant="single")


# --- cross-method properties -------------------------------------------------

BASKET = [(1,), (1, 1), (1, 2), (1, 3), (1, 2, 2, 3), (2, 3, 4), (1, 2, 3, 2, 5, 6, 7)]


@pytest.mark.parametrize("parts", BASKET)
def test_quasipoly_series_and_waves_match_dp(parts):
    a = PartSequence(parts)
    N = 3 * a.D
    dp = partition_counts_dp(a, N)
    assert restricted_series(parts, N) == dp
    q = quasipoly_from_moments(a)
    ws = wave_set(a)
    assert all(q.count(n) == dp[n] for n in range(N + 1))
    assert all(ws.value(n) == dp[n] for n in range(N + 1))
    assert ws.waves[1].coeffs[0] == polynomial_part_product(a)
    assert polynomial_part_product(a) == polynomial_part_bernoulli(a)


@pytest.mark.parametrize("parts", [(1,), (1, 1), (1, 2), (1, 3), (1, 2, 2, 3), (2, 3, 4)])
def test_explicit_matches_dp(parts):
    a = PartSequence(parts)
    dp = partition_counts_dp(a, 2 * a.D)
    assert all(partition_count_explicit(a, n) == dp[n] for n in range(2 * a.D + 1))


parts_st = st.lists(st.integers(1, 6), min_size=1, max_size=4).map(tuple)


@settings(max_examples=40, deadline=None)
@given(parts_st, st.integers(1, 3))
def test_results_independent_of_common_multiple(parts, factor):
    a = PartSequence(parts)
    b = PartSequence(parts, a.D * factor)
    qa, qb = quasipoly_from_moments(a), quasipoly_from_moments(b)
    assert all(qa.value(n) == qb.value(n) for n in range(2 * b.D))
    assert polynomial_part_product(a) == polynomial_part_product(b)
    for j in a.divisors():
        assert sylvester_wave(a, j) == sylvester_wave(b, j)


@settings(max_examples=40, deadline=None)
@given(parts_st)
def test_random_sequences_cross_check(parts):
    a = PartSequence(parts)
    dp = partition_counts_dp(a, 2 * a.D)
    q = quasipoly_from_moments(a)
    ws = wave_set(a)
    assert all(q.count(n) == dp[n] == ws.value(n) for n in range(2 * a.D + 1))
    assert polynomial_part_product(a) == polynomial_part_bernoulli(a)
