"""Exact dope matrices of rational polynomials and the largest possible row weight."""

from __future__ import annotations

from typing import Iterable

from .core import DopePattern, Polynomial, PointTuple, poly_derivative, poly_eval, poly_gcd
from .errors import ZeroPolynomial


def derivatives(p: Polynomial) -> list[Polynomial]:
    """[P, P', ..., P^(n)] for a nonzero P of degree n."""
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no dope matrix")
    out = [p]
    for _ in range(p.degree):
        out.append(poly_derivative(out[-1]))
    return out


def dope_row(p: Polynomial, lam) -> tuple[int, ...]:
    return tuple(int(poly_eval(q, lam) == 0) for q in derivatives(p))


def dope_matrix(p: Polynomial, points: Iterable) -> DopePattern:
    ders = derivatives(p)
    pts = points if isinstance(points, PointTuple) else PointTuple(points)
    if not pts:
        raise ValueError("need at least one point")
    return DopePattern(tuple(tuple(int(poly_eval(q, x) == 0) for q in ders) for x in pts))


def max_row_weight(p: Polynomial) -> int:
    """Largest number of derivatives of P that vanish at one complex point.

    A set J of derivative orders vanishes simultaneously somewhere in C iff
    gcd{P^(j) : j in J} is nonconstant, so the search grows J in increasing
    order and abandons a branch as soon as the running gcd is constant.
    """
    ders = derivatives(p)
    n = p.degree
    best = 0

    def grow(last: int, g: Polynomial, size: int):
        nonlocal best
        best = max(best, size)
        # P^(n) is a nonzero constant, never part of J
        for j in range(last + 1, n):
            if size + (n - j) <= best:
                break
            h = poly_gcd(g, ders[j])
            if h.degree >= 1:
                grow(j, h, size + 1)

    for j in range(n):
        if n - j <= best:
            break
        grow(j, ders[j].monic(), 1)
    return best
