import itertools
import random
from fractions import Fraction

import pytest

from dope.census import (
    EXACT,
    LEADING,
    CensusTable,
    census_count,
    leading_terms,
    realizable_small,
    sandwich_bounds,
    top_rows,
    v_table_small,
    v_top,
    v_top_minus1,
)
from dope.core import DopePattern, Polynomial, binomial
from dope.counting import upper_bound_count
from dope.errors import IncompleteTable, OutOfDomain
from dope.evaluate import dope_matrix


def oracle_count(n, m):
    """|D_n^m| by classifying every pattern whose last column is zero."""
    row_values = list(itertools.product((0, 1), repeat=n)) if n else [()]
    total = 0
    for rows in itertools.product(row_values, repeat=m):
        pat = DopePattern(tuple(r + (0,) for r in rows))
        total += realizable_small(pat)
    return total


def oracle_v(n, k):
    """Patterns counted by V(k, n): realizable, no zero row."""
    row_values = [r for r in itertools.product((0, 1), repeat=n) if any(r)]
    return sum(
        realizable_small(DopePattern(tuple(r + (0,) for r in rows)))
        for rows in itertools.product(row_values, repeat=k)
    ) if k else 1


def test_census_examples():
    assert census_count(1, 5, v_table_small(1)) == 6
    assert census_count(2, 3) == 1 + 9 + 9 + 3 == 22
    assert census_count(2, 4) == 3 * 4 + 3 * 6 + 3 * 4 + 1 == 43
    assert census_count(2, 5) == 76


def test_tables_match_oracle():
    for n in (0, 1, 2):
        table = v_table_small(n)
        for k in range(top_rows(n) + 2):
            assert table.values.get(k, 0) == oracle_v(n, k)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_census_matches_oracle(n):
    for m in range(1, 9):
        assert census_count(n, m) == oracle_count(n, m)


def test_closed_forms_small_n():
    for m in range(1, 9):
        assert census_count(1, m) == m + 1
        assert census_count(2, m) == 3 * binomial(m, 3) + 3 * binomial(m, 2) + 3 * m + 1


def test_oracle_accepts_actual_dope_matrices():
    rng = random.Random(31)
    pool = [Fraction(i, 2) for i in range(-4, 5)]
    for _ in range(400):
        n = rng.randint(0, 2)
        p = Polynomial.from_roots(rng.choices(pool, k=n), lead=rng.choice([1, -2, 3]))
        pts = rng.sample(pool, rng.randint(1, 6))
        assert realizable_small(dope_matrix(p, pts))


def test_census_monotone():
    for n in (1, 2):
        counts = [census_count(n, m) for m in range(1, 15)]
        assert counts == sorted(counts)


def test_v_table_domain():
    with pytest.raises(OutOfDomain):
        v_table_small(3)
    assert v_table_small(2).values == {0: 1, 1: 3, 2: 3, 3: 3}


def test_incomplete_table():
    partial = CensusTable(2, {0: 1, 1: 3}, EXACT)
    with pytest.raises(IncompleteTable):
        census_count(2, 4, partial)
    with pytest.raises(IncompleteTable):
        census_count(3, 4, CensusTable(3, {0: 1}, LEADING))
    with pytest.raises(IncompleteTable):
        census_count(1, 4, v_table_small(2))


def test_leading_coefficients():
    assert v_top(1) == 1 and v_top(2) == 3 and v_top(3) == 60
    assert v_top_minus1(1) == 1 and v_top_minus1(2) == 3 and v_top_minus1(3) == 90
    for n in (1, 2):
        t = top_rows(n)
        table = v_table_small(n)
        assert table.values[t] == v_top(n)
        assert table.values[t - 1] == v_top_minus1(n)
    for n in range(1, 9):
        exact = Fraction(v_top(n)) * (1 + Fraction((n - 1) * (n - 2), 4))
        assert exact == v_top_minus1(n)
    assert leading_terms(3) == "60*C(m,6) + 90*C(m,5) + O(m^4)"


def test_sandwich_examples():
    r = sandwich_bounds(2, 5)
    assert (r.lower, r.upper) == (30, 220)
    assert r.lower <= census_count(2, 5) <= r.upper
    r = sandwich_bounds(1, 3)
    assert (r.lower, r.upper) == (3, 6)
    with pytest.raises(OutOfDomain):
        sandwich_bounds(2, 3)
    r = sandwich_bounds(3, 7, top_count=10**6)
    assert r.upper == 7 * 10**6


def test_sandwich_holds():
    for n in (1, 2):
        for m in range(top_rows(n) + 1, 13):
            r = sandwich_bounds(n, m)
            assert r.lower <= census_count(n, m) <= r.upper


def test_upper_bound_dominates_census():
    for n in (1, 2):
        for m in range(1, 9):
            assert census_count(n, m) <= upper_bound_count(m, n)
