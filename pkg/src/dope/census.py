"""Counting all dope matrices (any points) as a polynomial in the number of rows.

|D_n^m| = Σ_k C(m, k) V(k, n), where V(k, n) counts k-row dope matrices
without zero rows and vanishes for k > T(n) = (n^2 + n)/2.  Exact tables
exist here only for n <= 2, where the root configurations of a linear or
quadratic polynomial can be listed by hand; for larger n only the two
leading coefficients are known.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .core import DopePattern, binomial
from .counting import BoundReport
from .errors import IncompleteTable, OutOfDomain

EXACT = "exact_small_n"
LEADING = "leading_terms_only"


def top_rows(n: int) -> int:
    """T(n) = (n^2 + n)/2, the most nonzero rows a dope matrix can have."""
    return n * (n + 1) // 2


@dataclass(frozen=True)
class CensusTable:
    n: int
    values: dict[int, int] = field(default_factory=dict)
    provenance: str = EXACT

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "provenance": self.provenance,
            "values": {str(k): str(v) for k, v in sorted(self.values.items())},
        }


# V(k, n) for n <= 2.
#   n = 0: P is a nonzero constant, nothing ever vanishes.
#   n = 1: the single root of P gives the row 10.
#   n = 2: either two simple roots (rows 100, 100) and the midpoint root of P'
#          (row 010), or a double root (row 110) that is also the root of P'.
_SMALL_TABLES = {
    0: {0: 1},
    1: {0: 1, 1: 1},
    2: {0: 1, 1: 3, 2: 3, 3: 3},
}


def v_table_small(n: int) -> CensusTable:
    if n not in _SMALL_TABLES:
        raise OutOfDomain("exact V tables are only available for n <= 2")
    table = CensusTable(n, dict(_SMALL_TABLES[n]), EXACT)
    assert set(table.values) == set(range(top_rows(n) + 1))
    assert table.values[0] == 1
    if n >= 1:
        assert table.values[top_rows(n)] == v_top(n)
        assert table.values[top_rows(n) - 1] == v_top_minus1(n)
    return table


def realizable_small(m: DopePattern) -> bool:
    """Decide whether a pattern with at most 3 columns is a dope matrix for some points.

    Uses the root configurations of degree 0, 1 and 2 polynomials directly,
    independent of the table above.
    """
    n = m.n
    if n > 2:
        raise OutOfDomain("root-configuration analysis only covers n <= 2")
    if any(m.column(n)):
        return False
    rows = [r for r in m.bits if any(r)]
    if n == 0:
        return not rows
    if n == 1:
        return len(rows) <= 1
    roots = rows.count((1, 0, 0))
    mids = rows.count((0, 1, 0))
    doubles = rows.count((1, 1, 0))
    if doubles:
        # a double root is also the only root of P'
        return doubles == 1 and len(rows) == 1
    return roots <= 2 and mids <= 1


def census_count(n: int, m: int, table: Optional[CensusTable] = None) -> int:
    """|D_n^m| = Σ_k C(m, k) V(k, n)."""
    if table is None:
        table = v_table_small(n)
    if table.n != n:
        raise IncompleteTable(f"table is for n={table.n}, not n={n}")
    if table.provenance != EXACT or any(k not in table.values for k in range(top_rows(n) + 1)):
        raise IncompleteTable("census needs V(k, n) for every k <= T(n)")
    return sum(binomial(m, k) * table.values[k] for k in range(min(m, top_rows(n)) + 1))


def v_top(n: int) -> int:
    """V(T(n), n) = T(n)! / (1! 2! ... n!)."""
    if n < 1:
        raise OutOfDomain("need n >= 1")
    denom = math.prod(math.factorial(j) for j in range(1, n + 1))
    num = math.factorial(top_rows(n))
    assert num % denom == 0
    return num // denom


def v_top_minus1(n: int) -> int:
    """Coefficient of C(m, T(n) - 1): V(T(n), n) * (1 + (n-1)(n-2)/4)."""
    top = v_top(n) * (4 + (n - 1) * (n - 2))
    assert top % 4 == 0
    return top // 4


def leading_terms(n: int) -> str:
    """The census polynomial's two leading terms with an explicit error marker."""
    t = top_rows(n)
    return f"{v_top(n)}*C(m,{t}) + {v_top_minus1(n)}*C(m,{t - 1}) + O(m^{t - 2})"


def sandwich_bounds(
    n: int,
    m: int,
    table: Optional[CensusTable] = None,
    top_count: Optional[int] = None,
) -> BoundReport:
    """max(C(m,T) V(T,n), |D_n^T|) <= |D_n^m| <= C(m,T) |D_n^T| for m > T = T(n).

    ``top_count`` supplies |D_n^T| when no exact table exists.
    """
    t = top_rows(n)
    if n < 1 or m <= t:
        raise OutOfDomain(f"need n >= 1 and m > {t}")
    if top_count is None:
        top_count = census_count(n, t, table if table is not None else v_table_small(n))
    c = binomial(m, t)
    lower = max(c * v_top(n), top_count)
    upper = c * top_count
    return BoundReport(m, n, "census_sandwich", lower, upper)
