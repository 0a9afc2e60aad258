"""Exact-arithmetic domain types and elementary polynomial operations.

Rationals are :class:`fractions.Fraction`, which is always reduced with a
positive denominator, so equality is structural.  Polynomials store their
coefficients in ascending order (constant term first).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BothZero, DimensionMismatch

Rational = Fraction


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(f"cannot interpret {value!r} as an exact rational")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    return str(value)


class Polynomial:
    """Immutable polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``.  Trailing zeros are
    stripped, so the zero polynomial has an empty coefficient tuple and
    degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Polynomial":
        p = cls([lead])
        for r in roots:
            p = p * cls([-to_rational(r), 1])
        return p

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial([{', '.join(map(str, self.coeffs))}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def __call__(self, x) -> Fraction:
        return poly_eval(self, x)

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = to_rational(other)
            return Polynomial(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial"):
        return poly_divmod(self, other)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Polynomial(c / lead for c in self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Polynomial":
        return cls(to_rational(c) for c in obj["coeffs"])


def poly_derivative(p: Polynomial, order: int = 1) -> Polynomial:
    """Return the ``order``-th formal derivative of ``p``."""
    if order < 0:
        raise ValueError("derivative order must be nonnegative")
    cs = p.coeffs
    if order > p.degree:
        return Polynomial()
    # falling factorial i*(i-1)*...*(i-order+1) = i! / (i-order)!
    return Polynomial(
        cs[i] * math.perm(i, order) for i in range(order, len(cs))
    )


def poly_eval(p: Polynomial, x) -> Fraction:
    """Exact Horner evaluation."""
    x = to_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = b.degree
    lead = b.coeffs[-1]
    if len(rem) - 1 < db:
        return Polynomial(), a
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        q = rem[k + db] / lead
        quot[k] = q
        if q:
            for i, c in enumerate(b.coeffs):
                rem[k + i] -= q * c
    return Polynomial(quot), Polynomial(rem[:db])


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor over the rationals (Euclid)."""
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with ``binomial(n, k) == 0`` outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class PointTuple(tuple):
    """Ordered tuple of pairwise distinct exact rationals."""

    def __new__(cls, points: Iterable = ()):
        pts = tuple(to_rational(p) for p in points)
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        return super().__new__(cls, pts)

    def to_json(self) -> dict:
        return {"points": [format_rational(p) for p in self]}

    @classmethod
    def from_json(cls, obj: dict) -> "PointTuple":
        return cls(obj["points"])


@dataclass(frozen=True)
class DopePattern:
    """An m x (n+1) 0/1 matrix; ``bits[i][j] == 1`` marks that the j-th derivative vanishes at point i."""

    bits: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(b) for b in row) for row in self.bits)
        if not rows:
            raise DimensionMismatch("a pattern needs at least one row")
        width = len(rows[0])
        if width < 1:
            raise DimensionMismatch("a pattern needs at least one column")
        for row in rows:
            if len(row) != width:
                raise DimensionMismatch("all rows must have equal length")
            if any(b not in (0, 1) for b in row):
                raise ValueError("pattern entries must be 0 or 1")
        object.__setattr__(self, "bits", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "DopePattern":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, m: int, n: int) -> "DopePattern":
        return cls(tuple((0,) * (n + 1) for _ in range(m)))

    @classmethod
    def from_sets(cls, sets: Sequence[Iterable[int]], n: int) -> "DopePattern":
        rows = []
        for s in sets:
            s = set(s)
            rows.append(tuple(1 if j in s else 0 for j in range(n + 1)))
        return cls(tuple(rows))

    @property
    def rows(self) -> int:
        return len(self.bits)

    @property
    def cols(self) -> int:
        return len(self.bits[0])

    @property
    def n(self) -> int:
        return self.cols - 1

    def ones(self) -> int:
        return sum(map(sum, self.bits))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.bits)

    def row_sets(self) -> list[frozenset[int]]:
        return [frozenset(j for j, b in enumerate(row) if b) for row in self.bits]

    def to_json(self) -> dict:
        return {"bits": ["".join(map(str, row)) for row in self.bits]}

    @classmethod
    def from_json(cls, obj: dict) -> "DopePattern":
        rows = obj["bits"]
        for r in rows:
            if not isinstance(r, str) or set(r) - {"0", "1"}:
                raise ValueError(f"bad pattern row {r!r}")
        return cls(tuple(tuple(int(c) for c in r) for r in rows))

    def __str__(self):
        return "\n".join("".join(map(str, row)) for row in self.bits)
