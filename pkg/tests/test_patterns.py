import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from dope.core import DopePattern
from dope.counting import count_generic_total
from dope.errors import BudgetExceeded, CarryOverflow, DimensionMismatch
from dope.patterns import (
    combine_rows,
    combine_rows_carry,
    count_dominating_shifts,
    count_limited_saturated,
    enumerate_safe,
    is_almost_safe,
    is_safe,
    is_saturated,
    is_t_dominating,
    is_t_limited,
    matrix_to_sequence,
    random_safe,
    sequence_to_matrix,
)

from oracles import all_matrices, brute_safe, naive_dominating, random_almost_safe_rows, rotations

M = DopePattern.from_rows
NONGENERIC = M([[1, 0, 0], [0, 1, 0], [1, 0, 0]])

patterns = st.integers(1, 4).flatmap(
    lambda m: st.integers(0, 5).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(0, 1), min_size=n + 1, max_size=n + 1), min_size=m, max_size=m
        ).map(M)
    )
)


def test_is_safe_examples():
    assert not is_safe(NONGENERIC)
    assert is_safe(DopePattern.zeros(4, 6))
    assert is_safe(M([[1, 0, 0], [0, 1, 0]]))


def test_is_almost_safe_examples():
    assert is_almost_safe(M([[1, 1, 0, 0, 1, 0], [0, 0, 0, 1, 0, 0], [1, 0, 0, 0, 1, 0]]))
    assert not is_almost_safe(M([[0, 1], [0, 1]]))


def test_saturated_and_limited_examples():
    m = M([[1, 0, 0], [0, 1, 0]])
    assert is_saturated(m) and is_t_limited(m, 1)
    z = DopePattern.zeros(2, 2)
    assert not is_saturated(z) and is_t_limited(z, 0)
    assert not is_t_limited(M([[1, 1, 0]]), 1)


@given(patterns)
def test_safe_implies_almost_safe(m):
    if is_safe(m):
        assert is_almost_safe(m)


@given(patterns)
def test_is_safe_matches_definition(m):
    assert is_safe(m) == brute_safe(m.bits)


def test_enumerate_examples():
    assert {p.row_sets()[0] for p in enumerate_safe(1, 2)} == {
        frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})
    }
    assert len(list(enumerate_safe(1, 2))) == 4
    assert len(list(enumerate_safe(2, 1))) == 3
    by_ones = Counter(p.ones() for p in enumerate_safe(3, 2))
    assert by_ones == {0: 1, 1: 6, 2: 12}


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 4) for n in range(0, 3)])
def test_enumerate_matches_brute_force(m, n):
    produced = [p.bits for p in enumerate_safe(m, n)]
    assert len(produced) == len(set(produced))
    assert set(produced) == {b for b in all_matrices(m, n) if brute_safe(b)}


def test_enumerate_order_and_filter():
    first = list(enumerate_safe(2, 2))
    assert first[0] == DopePattern.zeros(2, 2)
    assert list(enumerate_safe(2, 2)) == first
    for k in range(4):
        filtered = list(enumerate_safe(2, 2, ones=k))
        assert filtered == [p for p in first if p.ones() == k]


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(0, 5)])
def test_enumerate_count_matches_formula(m, n):
    assert sum(1 for _ in enumerate_safe(m, n)) == count_generic_total(m, n)


def test_count_limited_saturated_examples():
    for n in range(1, 7):
        assert count_limited_saturated(n, n, 1) >= 1
    brute = sum(
        1 for b in all_matrices(2, 2) if brute_safe(b) and sum(map(sum, b)) == 2
    )
    assert count_limited_saturated(2, 2, 2) == brute == 5
    assert count_limited_saturated(1, 2, 1) == 0
    assert count_limited_saturated(1, 2, 2) == 1


def test_count_limited_saturated_budget():
    with pytest.raises(BudgetExceeded):
        count_limited_saturated(6, 6, 2, budget=1000)


def test_sequence_examples():
    assert matrix_to_sequence(M([[1, 0], [0, 0]])) == (0, 0, 1, 0)
    assert matrix_to_sequence(DopePattern.zeros(3, 2)) == (0,) * 9
    with pytest.raises(DimensionMismatch):
        sequence_to_matrix((0, 1, 0), 2, 1)


def test_sequence_round_trip_random():
    rng = random.Random(7)
    for _ in range(500):
        m, n = rng.randint(1, 5), rng.randint(0, 5)
        pat = M([[rng.randint(0, 1) for _ in range(n + 1)] for _ in range(m)])
        assert sequence_to_matrix(matrix_to_sequence(pat), m, n) == pat


def test_dominating_examples():
    assert is_t_dominating((0, 0, 1), 1)
    assert not is_t_dominating((1, 0, 0, 0), 0)
    assert not is_t_dominating((0, 1, 0), 1)


def test_dominating_shift_examples():
    assert count_dominating_shifts((0, 0, 1), 1) == 1
    assert count_dominating_shifts((0, 0, 0, 0, 1, 1), 2) == 0
    assert count_dominating_shifts((0,) * 7, 0) == 7


@given(st.lists(st.integers(0, 1), min_size=1, max_size=12), st.integers(0, 4))
def test_dominating_shifts_match_naive_rotation(seq, t):
    seq = tuple(seq)
    assert is_t_dominating(seq, t) == naive_dominating(seq, t)
    expected = sum(naive_dominating(r, t) for r in rotations(seq))
    assert count_dominating_shifts(seq, t) == expected


def test_random_safe_is_safe_and_uniform():
    rng = random.Random(3)
    seen = Counter(random_safe(2, 2, rng).bits for _ in range(3000))
    assert all(brute_safe(b) for b in seen)
    assert len(seen) == count_generic_total(2, 2)
    # 10 safe 2x3 patterns, ~300 draws each
    assert min(seen.values()) > 200


def test_combine_rows_examples():
    assert combine_rows({0, 1, 4}, {0, 4}, 5) == {0, 1, 2, 4, 5}
    assert combine_rows({0}, set(), 3) == {0}
    assert combine_rows({0}, {0}, 1) == {0, 1}


def test_combine_rows_carry_examples():
    assert combine_rows_carry({0, 1, 4}, {0, 4}, 5) == {0, 1, 2, 4, 5}
    assert combine_rows_carry(set(), set(), 2) == frozenset()
    with pytest.raises(CarryOverflow):
        combine_rows_carry({1}, {1}, 1)


def test_carry_matches_formula_and_is_confluent():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(0, 16)
        s1 = {j for j in range(n + 1) if rng.random() < 0.4}
        s2 = {j for j in range(n + 1) if rng.random() < 0.4}
        try:
            merged = combine_rows_carry(s1, s2, n)
        except CarryOverflow:
            for seed in range(3):
                with pytest.raises(CarryOverflow):
                    combine_rows_carry(s1, s2, n, random.Random(seed))
            continue
        assert merged == combine_rows(s1, s2, n)
        assert len(merged) == len(s1) + len(s2)
        for seed in range(10):
            assert combine_rows_carry(s1, s2, n, random.Random(seed)) == merged


def test_combining_preserves_almost_safe():
    rng = random.Random(5)
    checked = 0
    while checked < 400:
        m, n = rng.randint(2, 4), rng.randint(0, 10)
        rows = random_almost_safe_rows(rng, m, n, density=rng.random())
        pat = M(rows)
        assert is_almost_safe(pat)
        sets = pat.row_sets()
        merged = combine_rows(sets[0], sets[-1], n)
        reduced = DopePattern.from_sets([merged] + sets[1:-1], n)
        assert is_almost_safe(reduced)
        assert reduced.ones() == pat.ones()
        checked += 1


@pytest.mark.parametrize("m,n,t", [(2, 3, 1), (3, 3, 2), (3, 4, 1), (4, 3, 2)])
def test_row_limit_pruning_matches_filter(m, n, t):
    pruned = list(enumerate_safe(m, n, row_limit=t))
    assert pruned == [p for p in enumerate_safe(m, n) if is_t_limited(p, t)]
    assert count_limited_saturated(m, n, t) == sum(
        1 for p in enumerate_safe(m, n, ones=n) if is_t_limited(p, t)
    )
