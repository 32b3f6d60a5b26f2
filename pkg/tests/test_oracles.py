import pytest

from ppdiamond.errors import BudgetExceeded
from ppdiamond.oracles import (
    diamond_series,
    enumerate_diamonds,
    is_diamond,
    iter_diamonds,
    restricted_series,
)


def test_enumeration_examples():
    assert enumerate_diamonds(1, 2) == 3
    assert set(iter_diamonds(1, 2)) == {(2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0)}
    assert enumerate_diamonds(1, 0) == 1
    assert list(iter_diamonds(2, 1)) == [(1, 0, 0, 0, 0, 0, 0)]


def test_enumeration_order_is_deterministic():
    assert list(iter_diamonds(2, 6)) == list(iter_diamonds(2, 6))


def _all_tuples(length, n):
    if length == 1:
        yield (n,)
        return
    for v in range(n + 1):
        for rest in _all_tuples(length - 1, n - v):
            yield (v,) + rest


@pytest.mark.parametrize("k,n", [(1, 7), (2, 6), (3, 4)])
def test_enumeration_matches_unpruned_filter(k, n):
    # compositions of n into 3k+1 parts, filtered by the validator only
    expected = sorted(t for t in _all_tuples(3 * k + 1, n) if is_diamond(t, k))
    assert sorted(iter_diamonds(k, n)) == expected


@pytest.mark.parametrize("k", [1, 2])
def test_streamed_sequences_are_diamonds(k):
    for n in range(12):
        for d in iter_diamonds(k, n):
            assert is_diamond(d, k) and sum(d) == n


def test_validator_rejects():
    assert not is_diamond((0, 1, 0, 0), 1)
    assert not is_diamond((1, 1, 0, 1), 1)
    assert not is_diamond((1, 0, 0), 1)
    assert not is_diamond((1, 0, 0, -1), 1)


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_diamonds(2, 20, budget=100)


def test_series_examples():
    assert diamond_series(1, 7) == [1, 1, 3, 4, 7, 9, 14, 17]
    assert diamond_series(2, 2)[2] == 3 == enumerate_diamonds(2, 2)
    assert all(diamond_series(k, 0) == [1] for k in range(1, 5))
    assert restricted_series((1, 2, 2, 3), 6)[-1] == 14
    assert restricted_series((1,), 3) == [1, 1, 1, 1]
    assert restricted_series((2,), 3) == [1, 0, 1, 0]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_raw_and_reduced_forms_agree(k):
    assert diamond_series(k, 300, "raw") == diamond_series(k, 300, "reduced")


def test_macmahon_series():
    assert diamond_series(1, 500) == restricted_series((1, 2, 2, 3), 500)


def test_bad_form():
    with pytest.raises(ValueError):
        diamond_series(1, 3, "other")
