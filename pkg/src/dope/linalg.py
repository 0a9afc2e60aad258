"""Exact rational linear algebra and the binomial systems behind generic independence.

Matrices are plain lists of rows.  Rational rows are scaled to integers
and reduced with Bareiss fraction-free elimination, so every intermediate
value stays an integer and exact division is the only division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .core import Polynomial, binomial, poly_derivative, poly_eval, to_rational
from .errors import ConditionViolated, DimensionMismatch, DominanceViolated

Matrix = list[list[Fraction]]


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        row = [to_rational(x) for x in row]
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def _bareiss(a: list[list[int]], ncols: int) -> list[tuple[int, int]]:
    """Reduce ``a`` in place to echelon form; returns the pivot positions (row, col).

    Only the first ``ncols`` columns are pivot candidates, so an augmented
    right-hand side is carried along without being pivoted on.  Among the
    nonzero candidates the one with the smallest bit length is chosen.
    """
    nrows = len(a)
    width = len(a[0]) if a else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            if a[i][c] and (best is None or abs(a[i][c]).bit_length() < abs(a[best][c]).bit_length()):
                best = i
        if best is None:
            continue
        a[r], a[best] = a[best], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, width):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        pivots.append((r, c))
        r += 1
    return pivots


def rank(a: Sequence[Sequence]) -> int:
    """Exact rank over the rationals."""
    if not a or not a[0]:
        return 0
    rows = _integer_rows(a)
    return len(_bareiss(rows, len(rows[0])))


def solve(a: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """Solve the square system ``a x = b`` exactly; ``None`` when ``a`` is singular."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionMismatch("solve needs a square matrix")
    if len(b) != n:
        raise DimensionMismatch("right-hand side length does not match the matrix")
    if n == 0:
        return []
    aug = _integer_rows([list(row) + [rhs] for row, rhs in zip(a, b)])
    pivots = _bareiss(aug, n)
    if len(pivots) < n:
        return None
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(aug[i][n])
        for j in range(i + 1, n):
            acc -= aug[i][j] * x[j]
        x[i] = acc / aug[i][i]
    return x


def mat_vec(a: Sequence[Sequence], x: Sequence) -> list[Fraction]:
    return [sum((to_rational(p) * to_rational(q) for p, q in zip(row, x)), Fraction(0)) for row in a]


def binomial_matrix(g: Iterable[int], h: Iterable[int]) -> Matrix:
    """The matrix [C(g, h)] with rows and columns in increasing order."""
    return [[Fraction(binomial(gi, hi)) for hi in sorted(set(h))] for gi in sorted(set(g))]


def dominates(g: Iterable[int], h: Iterable[int]) -> bool:
    """|G ∩ [0, c]| <= |H ∩ [0, c]| for every c."""
    gs, hs = sorted(set(g)), sorted(set(h))
    if len(gs) > len(hs):
        return False
    # equivalent to the i-th smallest of G being at least the i-th smallest of H
    return all(x >= y for x, y in zip(gs, hs))


def gv_rank_check(g: Iterable[int], h: Iterable[int]) -> bool:
    g, h = set(g), set(h)
    if not dominates(g, h):
        raise DominanceViolated(f"G={sorted(g)} is not dominated by H={sorted(h)}")
    r = rank(binomial_matrix(g, h)) if g else 0
    assert r == len(g), f"binomial matrix has rank {r}, expected {len(g)}"
    return r == len(g)


@dataclass(frozen=True)
class LimitCoefficients:
    """Coefficients expressing P^(d)(λ) through values at λ and λ+ε, up to an O(ε) remainder."""

    d: int
    c1: dict[int, Fraction] = field(default_factory=dict)
    c2: dict[int, Fraction] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "c1": {str(k): str(v) for k, v in sorted(self.c1.items())},
            "c2": {str(k): str(v) for k, v in sorted(self.c2.items())},
        }


def check_limit_condition(d: int, s1: Iterable[int], s2: Iterable[int]) -> tuple[frozenset, frozenset]:
    s1, s2 = frozenset(s1), frozenset(s2)
    if d < 0:
        raise ConditionViolated("d must be nonnegative")
    if any(s < 0 or s > d for s in s1 | s2):
        raise ConditionViolated(f"row sets must lie in [0, {d}]")
    suffix = 0
    for t in range(d, -1, -1):
        suffix += (t in s1) + (t in s2)
        if suffix > d - t + 1:
            raise ConditionViolated(f"{suffix} ones in columns [{t}, {d}]")
    if suffix != d + 1:
        raise ConditionViolated(f"need exactly {d + 1} ones in total, got {suffix}")
    return s1, s2


def derivative_limit_coeffs(d: int, s1: Iterable[int], s2: Iterable[int]) -> LimitCoefficients:
    """Find c1, c2 with [t∈S1]·c1[t] + Σ_{s∈S2, s≤t} C(t,s)·c2[s] = d!·[t = d] for all t in [0, d].

    The c2 part solves the binomial system on rows [0, d] minus S1.  Columns
    of S2 are taken greedily in increasing order while they raise the rank;
    the rest are set to zero.
    """
    s1, s2 = check_limit_condition(d, s1, s2)
    fact = math.factorial(d)
    rows = sorted(set(range(d + 1)) - s1)
    target = [Fraction(fact if g == d else 0) for g in rows]

    chosen: list[int] = []
    for h in sorted(s2):
        trial = chosen + [h]
        if rank(binomial_matrix(rows, trial)) == len(trial):
            chosen = trial
        if len(chosen) == len(rows):
            break
    if len(chosen) != len(rows):
        raise ConditionViolated("binomial system has no full-rank square subsystem")
    sol = solve(binomial_matrix(rows, chosen), target) if rows else []
    if sol is None:
        raise ConditionViolated("binomial subsystem is singular")
    c2 = {h: Fraction(0) for h in s2}
    c2.update(zip(chosen, sol))
    c1 = {}
    for t in sorted(s1):
        rhs = Fraction(fact if t == d else 0)
        c1[t] = rhs - sum((binomial(t, s) * c for s, c in c2.items() if s <= t), Fraction(0))
    return LimitCoefficients(d, c1, c2)


def limit_identity_residual(
    coeffs: LimitCoefficients,
    p: Polynomial,
    lam,
    s1: Iterable[int],
    s2: Iterable[int],
) -> dict[int, Fraction]:
    """Laurent expansion in ε of
    P^(d)(λ) - Σ_{S1} c1[s] P^(s)(λ)/s! ε^(s-d) - Σ_{S2} c2[s] P^(s)(λ+ε)/s! ε^(s-d),
    as {exponent: coefficient} with zero terms dropped."""
    lam = to_rational(lam)
    d = coeffs.d
    # taylor[r] = P^(r)(λ)
    taylor = [poly_eval(poly_derivative(p, r), lam) for r in range(max(p.degree, d) + 1)]
    res: dict[int, Fraction] = {}

    def add(e: int, v: Fraction):
        res[e] = res.get(e, Fraction(0)) + v

    add(0, taylor[d] if d < len(taylor) else Fraction(0))
    for s in s1:
        c = coeffs.c1.get(s, Fraction(0))
        if c and s < len(taylor):
            add(s - d, -c * taylor[s] / math.factorial(s))
    for s in s2:
        c = coeffs.c2.get(s, Fraction(0))
        if not c:
            continue
        # P^(s)(λ+ε) = Σ_r P^(s+r)(λ) ε^r / r!
        for r in range(len(taylor) - s):
            v = taylor[s + r]
            if v:
                add(s - d + r, -c * v / (math.factorial(s) * math.factorial(r)))
    return {e: v for e, v in res.items() if v}


def verify_limit_identity(
    coeffs: LimitCoefficients,
    p: Polynomial,
    lam,
    s1: Iterable[int],
    s2: Iterable[int],
) -> bool:
    """True iff the residual is ε times a polynomial, i.e. has no terms of degree <= 0."""
    res = limit_identity_residual(coeffs, p, lam, s1, s2)
    return all(e > 0 for e in res)
