"""Closed-form counts of generic dope matrices and bound calculators.

Everything that is an integer or a rational is kept exact.  Logarithms and
powers of e are evaluated with :mod:`decimal` at ``LOG_PRECISION`` digits and
reported as fixed-point strings; only that last step is approximate.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Optional, Union

from .core import binomial
from .errors import OutOfDomain
from .patterns import DEFAULT_ENUMERATION_BUDGET, count_limited_saturated

LOG_PRECISION = 40
# digits after the point in reported decimals
DECIMAL_PLACES = 20

Number = Union[int, Fraction, Decimal]


@dataclass(frozen=True)
class BoundReport:
    m: int
    n: int
    kind: str
    lower: Optional[Number]
    upper: Optional[Number]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "kind": self.kind,
            "lower": _fmt(self.lower),
            "upper": _fmt(self.upper),
        }


def _fmt(x: Optional[Number]) -> Optional[str]:
    if x is None:
        return None
    if isinstance(x, Decimal):
        return format(x.quantize(Decimal(1).scaleb(-DECIMAL_PLACES)), "f")
    return str(x)


def _context() -> decimal.Context:
    return decimal.Context(prec=LOG_PRECISION)


def exact_log(x: int) -> Decimal:
    """Natural logarithm of a positive integer to LOG_PRECISION significant digits."""
    if x <= 0:
        raise OutOfDomain("log of a nonpositive number")
    return _context().ln(Decimal(x))


def count_generic_k(m: int, n: int, k: int) -> int:
    """Safe m x (n+1) patterns with exactly k ones: (n+1-k)/(n+1) * C((n+1)m, k)."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    if k < 0 or k > n:
        return 0
    big = (n + 1) * m
    value = binomial(big - 1, k) - (m - 1) * binomial(big - 1, k - 1)
    assert (n + 1 - k) * binomial(big, k) == (n + 1) * value
    return value


def count_generic_total(m: int, n: int) -> int:
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    big = (n + 1) * m
    total = binomial(big - 1, n) - (m - 2) * sum(binomial(big - 1, k) for k in range(n))
    assert total == sum(count_generic_k(m, n, k) for k in range(n + 1))
    return total


def generic_bounds(m: int, n: int) -> BoundReport:
    """C((n+1)m, n)/(n+1) <= |generic| <= (1 + 1/(m-2))^2 * C((n+1)m, n)/(n+1), as exact rationals."""
    if m < 3 or n < 1:
        raise OutOfDomain("generic bounds need m >= 3 and n >= 1")
    lower = Fraction(binomial((n + 1) * m, n), n + 1)
    upper = Fraction(m - 1, m - 2) ** 2 * lower
    return BoundReport(m, n, "generic_count_bounds", lower, upper)


def small_m_log_bounds(m: int, n: int) -> BoundReport:
    """Endpoints log(n^m C(mn, n)) and log(n^(2m) C(mn, n)) without the (1 + o(1)) factors."""
    if not (1 < m and 2 * m <= n * n + n):
        raise OutOfDomain("need 1 < m <= (n^2 + n)/2")
    c = binomial(m * n, n)
    return BoundReport(m, n, "small_m_log_bounds", exact_log(n**m * c), exact_log(n ** (2 * m) * c))


def upper_bound_count(m: int, n: int) -> int:
    """C(mn, n) * (((n^2+n+2)/2)^m + n)."""
    if m < 1 or n < 1:
        raise OutOfDomain("need m >= 1 and n >= 1")
    return binomial(m * n, n) * (((n * n + n + 2) // 2) ** m + n)


def grossbound_lower(m: int, n: int, a: int, t: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> Decimal:
    """C(a, n, t) * ((n+1)/(e(t^2+t)) - a/(en))^(m-a), with C(a, n, t) enumerated."""
    if n < 1 or t < 1:
        raise OutOfDomain("need n >= 1 and t >= 1")
    if not (0 <= a <= m and m * (t * t + t) <= n * n + n):
        raise OutOfDomain("need 0 <= a <= m <= (n^2 + n)/(t^2 + t)")
    # no zero-row pattern carries n >= 1 ones
    c = count_limited_saturated(a, n, t, budget) if a >= 1 else 0
    ctx = _context()
    e = ctx.exp(Decimal(1))
    base = ctx.subtract(
        ctx.divide(Decimal(n + 1), ctx.multiply(e, Decimal(t * t + t))),
        ctx.divide(Decimal(a), ctx.multiply(e, Decimal(n))),
    )
    return ctx.multiply(Decimal(c), ctx.power(base, m - a))


def grossbound_report(m: int, n: int, a: int, t: int) -> BoundReport:
    return BoundReport(m, n, "grossbound_lower", grossbound_lower(m, n, a, t), None)


def upper_bound_report(m: int, n: int) -> BoundReport:
    return BoundReport(m, n, "upper_bound_count", None, upper_bound_count(m, n))
