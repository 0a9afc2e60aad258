"""Combinatorics of 0/1 derivative-vanishing patterns.

A pattern with ``n + 1`` columns is *safe* when, for every ``k``, its last
``k + 1`` columns hold at most ``k`` ones, and *almost-safe* when they hold
at most ``k + 1``.  Safe patterns are exactly the patterns realizable at
generic points, which is what :func:`enumerate_safe` walks.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, Optional, Sequence

from .core import DopePattern
from .errors import BudgetExceeded, CarryOverflow, DimensionMismatch

DEFAULT_ENUMERATION_BUDGET = 2_000_000


def _suffix_counts(m: DopePattern) -> Iterator[tuple[int, int]]:
    """Yield ``(k, ones in the last k+1 columns)`` for k = 0..n."""
    total = 0
    for k in range(m.cols):
        total += sum(m.column(m.n - k))
        yield k, total


def is_safe(m: DopePattern) -> bool:
    return all(total <= k for k, total in _suffix_counts(m))


def is_almost_safe(m: DopePattern) -> bool:
    return all(total <= k + 1 for k, total in _suffix_counts(m))


def is_saturated(m: DopePattern) -> bool:
    return m.ones() == m.n and is_safe(m)


def is_t_limited(m: DopePattern, t: int) -> bool:
    return all(sum(row) <= t for row in m.bits)


def _pattern_from_columns(masks: Sequence[int], m: int) -> DopePattern:
    # masks[j] holds column j, bit i <-> row i
    return DopePattern(
        tuple(tuple((mask >> i) & 1 for mask in masks) for i in range(m))
    )


def enumerate_safe(
    m: int,
    n: int,
    ones: Optional[int] = None,
    row_limit: Optional[int] = None,
) -> Iterator[DopePattern]:
    """Yield every safe m x (n+1) pattern exactly once.

    Columns are filled right to left; inside a column, row subsets are
    tried in increasing binary value (bit i is row i).  When ``ones`` is
    given only patterns with exactly that many ones are produced; with
    ``row_limit`` only patterns whose rows hold at most that many ones.
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    if ones is not None and (ones < 0 or ones > n):
        return
    popcount = [bin(mask).count("1") for mask in range(1 << m)]
    masks = [0] * (n + 1)
    row_ones = [0] * m

    def fits(mask: int) -> bool:
        return all(row_ones[i] < row_limit for i in range(m) if (mask >> i) & 1)

    def walk(j: int, total: int) -> Iterator[DopePattern]:
        if j < 0:
            if ones is None or total == ones:
                yield _pattern_from_columns(masks, m)
            return
        k = n - j
        for mask in range(1 << m):
            t = total + popcount[mask]
            if t > k:
                continue
            if ones is not None and (t > ones or ones - t > m * j):
                continue
            if row_limit is not None:
                if not fits(mask):
                    continue
                for i in range(m):
                    row_ones[i] += (mask >> i) & 1
            masks[j] = mask
            yield from walk(j - 1, t)
            if row_limit is not None:
                for i in range(m):
                    row_ones[i] -= (mask >> i) & 1
        masks[j] = 0

    yield from walk(n, 0)


def random_safe(m: int, n: int, rng: random.Random, ones: Optional[int] = None) -> DopePattern:
    """Draw a safe pattern, uniform among those with the chosen number of ones.

    A random 0/1 sequence is rotated to one of its (m-1)-dominating cyclic
    shifts and read back as a pattern.  If ``ones`` is not given it is drawn
    with probability proportional to the number of safe patterns having it.
    """
    length = m * (n + 1)
    if ones is None:
        from .counting import count_generic_k

        weights = [count_generic_k(m, n, k) for k in range(n + 1)]
        ones = rng.choices(range(n + 1), weights=weights)[0]
    seq = [1] * ones + [0] * (length - ones)
    rng.shuffle(seq)
    starts = dominating_shift_starts(seq, m - 1)
    p = rng.choice(starts)
    return sequence_to_matrix(seq[p:] + seq[:p], m, n)


def count_limited_saturated(a: int, n: int, t: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> int:
    """Number of a x (n+1) safe, t-limited, saturated patterns, by enumeration.

    ``budget`` caps the number of saturated safe patterns the walk may have
    to consider; that number is known in closed form, so oversize requests
    fail before any work is done.
    """
    if a < 1 or n < 1 or t < 0:
        raise ValueError("need a >= 1, n >= 1, t >= 0")
    from .counting import count_generic_k

    size = count_generic_k(a, n, n)
    if size > budget:
        raise BudgetExceeded(f"{size} saturated patterns exceed the budget of {budget}")
    return sum(1 for _ in enumerate_safe(a, n, ones=n, row_limit=t))


def matrix_to_sequence(m: DopePattern) -> tuple[int, ...]:
    """Read columns from the rightmost to the leftmost, top row first within a column."""
    return tuple(row[j] for j in range(m.n, -1, -1) for row in m.bits)


def sequence_to_matrix(seq: Sequence[int], m: int, n: int) -> DopePattern:
    if len(seq) != m * (n + 1):
        raise DimensionMismatch(f"sequence of length {len(seq)} does not fit {m} x {n + 1}")
    rows = [[0] * (n + 1) for _ in range(m)]
    for idx, bit in enumerate(seq):
        col_from_right, i = divmod(idx, m)
        rows[i][n - col_from_right] = int(bit)
    return DopePattern.from_rows(rows)


def parse_sequence(text: str) -> tuple[int, ...]:
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"not a 0/1 sequence: {text!r}")
    return tuple(int(c) for c in text)


def is_t_dominating(seq: Sequence[int], t: int) -> bool:
    """Every nonempty prefix has more than ``t`` times as many zeros as ones."""
    zeros = ones = 0
    for bit in seq:
        if bit:
            ones += 1
        else:
            zeros += 1
        if zeros <= t * ones:
            return False
    return True


def dominating_shift_starts(seq: Sequence[int], t: int) -> list[int]:
    """Offsets p for which ``seq[p:] + seq[:p]`` is t-dominating (checked shift by shift)."""
    L = len(seq)
    # a zero weighs +1, a one weighs -t; a shift dominates iff all its prefix sums are positive
    w = [0]
    for bit in list(seq) * 2:
        w.append(w[-1] + (-t if bit else 1))
    return [p for p in range(L) if min(w[p + 1:p + L + 1]) > w[p]]


def count_dominating_shifts(seq: Sequence[int], t: int) -> int:
    """Brute-force count of t-dominating cyclic shifts.

    When the sequence has ``a`` zeros and ``b`` ones with ``a >= t*b`` the
    count must be ``a - t*b``; that is asserted.
    """
    count = len(dominating_shift_starts(seq, t))
    b = sum(seq)
    a = len(seq) - b
    if a >= t * b:
        assert count == a - t * b, (seq, t, count)
    return count


def _check_rowset(s: Iterable[int], n: int) -> frozenset[int]:
    s = frozenset(s)
    if any(x < 0 or x > n for x in s):
        raise ValueError(f"row set {sorted(s)} not inside [0, {n}]")
    return s


def combine_rows(s1: Iterable[int], s2: Iterable[int], n: int) -> frozenset[int]:
    """Merge two rows: s is kept iff some window [t, s] holds at least s-t+1 of their ones."""
    s1, s2 = _check_rowset(s1, n), _check_rowset(s2, n)
    v = [(j in s1) + (j in s2) for j in range(n + 1)]
    out = set()
    for s in range(n + 1):
        acc = 0
        for t in range(s, -1, -1):
            acc += v[t]
            if acc >= s - t + 1:
                out.add(s)
                break
    return frozenset(out)


def combine_rows_carry(
    s1: Iterable[int],
    s2: Iterable[int],
    n: int,
    rng: Optional[random.Random] = None,
) -> frozenset[int]:
    """Merge two rows by adding them and carrying any 2 one column to the right.

    Without ``rng`` the lowest overfull column is carried first; with one, an
    overfull column is picked at random on each step.  The final vector does
    not depend on these choices.  Raises CarryOverflow if column ``n`` would
    need to carry.
    """
    s1, s2 = _check_rowset(s1, n), _check_rowset(s2, n)
    v = [(j in s1) + (j in s2) for j in range(n + 1)]
    while True:
        over = [j for j, x in enumerate(v) if x >= 2]
        if not over:
            break
        j = rng.choice(over) if rng is not None else over[0]
        if j == n:
            raise CarryOverflow(f"carry out of column {n}")
        v[j] -= 1
        v[j + 1] += 1
    return frozenset(j for j, x in enumerate(v) if x)
