"""Certified polynomial witnesses for safe patterns.

Given a safe pattern M with z ones and n+1 columns, columns with ones in
the first two rows are prepended until the pattern has as many ones as
its degree bound (c = n - z extra columns).  The vanishing conditions plus
a unit leading coefficient form a square linear system; at generic points
it has a unique solution P0 whose dope matrix is exactly the extended
pattern, and the c-th derivative of P0 realizes M.

Rational points can be non-generic, so every attempt is checked exactly and
bad draws are resampled.  Returned certificates are always correct.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import DopePattern, Polynomial, PointTuple, poly_derivative
from .errors import NotLimited, NotSafe, NotSaturated, RetriesExhausted
from .evaluate import dope_matrix, max_row_weight
from .linalg import solve
from .patterns import is_safe, is_saturated, is_t_limited

log = logging.getLogger(__name__)

POINT_RANGE = 1 << 16


@dataclass(frozen=True)
class SynthesisCertificate:
    target: DopePattern
    points: PointTuple
    poly: Polynomial
    prepended_columns: int
    padded_row: bool
    attempts_used: int
    verified: bool
    appended_rows: int = 0

    def to_json(self) -> dict:
        return {
            "target": self.target.to_json(),
            "points": self.points.to_json(),
            "poly": self.poly.to_json(),
            "prepended_columns": self.prepended_columns,
            "padded_row": self.padded_row,
            "appended_rows": self.appended_rows,
            "attempts_used": self.attempts_used,
            "verified": self.verified,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SynthesisCertificate":
        return cls(
            target=DopePattern.from_json(obj["target"]),
            points=PointTuple.from_json(obj["points"]),
            poly=Polynomial.from_json(obj["poly"]),
            prepended_columns=int(obj["prepended_columns"]),
            padded_row=bool(obj["padded_row"]),
            attempts_used=int(obj["attempts_used"]),
            verified=bool(obj["verified"]),
            appended_rows=int(obj.get("appended_rows", 0)),
        )


def extend_pattern(m: DopePattern) -> tuple[DopePattern, int, bool]:
    """Pad a single row with a zero row, then prepend columns marked in rows 0 and 1.

    Returns ``(extended, c, padded)``; the extended pattern is safe with
    exactly ``n + c`` ones when ``m`` is safe.
    """
    rows = [list(r) for r in m.bits]
    padded = len(rows) == 1
    if padded:
        rows.append([0] * m.cols)
    c = m.n - m.ones()
    ext = [[1 if i < 2 else 0] * c + r for i, r in enumerate(rows)]
    return DopePattern.from_rows(ext), c, padded


def vanishing_form(j: int, x, degree: int) -> list:
    """Coefficients of a_0..a_degree in P^(j)(x) = Σ_r r!/(r-j)! x^(r-j) a_r."""
    return [0 if r < j else math.perm(r, j) * x ** (r - j) for r in range(degree + 1)]


def realize(pattern: DopePattern, points: Sequence) -> Optional[Polynomial]:
    """Solve for the polynomial of degree ``cols - 1`` with unit leading coefficient
    vanishing exactly where ``pattern`` has ones.

    Only the linear system is solved here; ``None`` means it was singular.
    The caller still has to compare the full dope matrix.
    """
    degree = pattern.n
    a, b = [], []
    for i, row in enumerate(pattern.bits):
        for j, bit in enumerate(row):
            if bit:
                a.append(vanishing_form(j, points[i], degree))
                b.append(0)
    a.append([0] * degree + [1])
    b.append(1)
    if len(a) != degree + 1:
        return None
    sol = solve(a, b)
    return None if sol is None else Polynomial(sol)


def _draw_points(rng: random.Random, count: int, attempt: int) -> PointTuple:
    bound = POINT_RANGE * attempt
    return PointTuple(rng.sample(range(-bound, bound + 1), count))


def _synthesize(m: DopePattern, seed: int, max_attempts: int, accept=None, appended_rows: int = 0) -> SynthesisCertificate:
    ext, c, padded = extend_pattern(m)
    rng = random.Random(seed)
    for attempt in range(1, max_attempts + 1):
        pts = _draw_points(rng, ext.rows, attempt)
        p0 = realize(ext, pts)
        if p0 is None:
            log.debug("attempt %d: singular system at %s", attempt, pts)
            continue
        if dope_matrix(p0, pts) != ext:
            log.debug("attempt %d: spurious vanishing at %s", attempt, pts)
            continue
        p = poly_derivative(p0, c)
        keep = PointTuple(pts[: m.rows])
        if padded and any(dope_matrix(p, pts).bits[-1]):
            continue
        if dope_matrix(p, keep) != m:
            continue
        if accept is not None and not accept(p):
            log.debug("attempt %d: candidate rejected by acceptance test", attempt)
            continue
        return SynthesisCertificate(m, keep, p, c, padded, attempt, True, appended_rows)
    raise RetriesExhausted(f"no certified witness after {max_attempts} attempts")


def synthesize(m: DopePattern, seed: int = 0, max_attempts: int = 20) -> SynthesisCertificate:
    """Find a rational polynomial of degree n and distinct integer points realizing ``m``."""
    if not is_safe(m):
        raise NotSafe("pattern is not safe, so it is not realizable at generic points")
    return _synthesize(m, seed, max_attempts)


def saturate(m: DopePattern) -> DopePattern:
    """Append rows with a single one in column 0 until the pattern has n ones."""
    missing = m.n - m.ones()
    extra = [(1,) + (0,) * m.n] * max(missing, 0)
    return DopePattern(m.bits + tuple(extra))


def synthesize_limited(
    m: DopePattern,
    t: int,
    seed: int = 0,
    max_attempts: int = 20,
    saturate_rows: bool = False,
) -> SynthesisCertificate:
    """Like :func:`synthesize`, but only accepts P whose dope row at every
    complex point has at most ``t`` ones.

    A non-saturated pattern is rejected unless ``saturate_rows`` is set; then
    rows ``(1, 0, ..., 0)`` are appended to saturate it, the witness is built
    for the enlarged pattern and the extra points are dropped again.
    """
    if not is_safe(m):
        raise NotSafe("pattern is not safe")
    if not is_t_limited(m, t):
        raise NotLimited(f"some row has more than {t} ones")
    work = m
    if not is_saturated(m):
        if not saturate_rows:
            raise NotSaturated(f"pattern has {m.ones()} ones, needs {m.n}")
        work = saturate(m)
    cert = _synthesize(
        work, seed, max_attempts,
        accept=lambda p: max_row_weight(p) <= t,
        appended_rows=work.rows - m.rows,
    )
    if work is m:
        return cert
    keep = PointTuple(cert.points[: m.rows])
    assert dope_matrix(cert.poly, keep) == m
    return SynthesisCertificate(m, keep, cert.poly, cert.prepended_columns, cert.padded_row,
                                cert.attempts_used, True, cert.appended_rows)


def verify_certificate(cert: SynthesisCertificate) -> bool:
    """Recompute the dope matrix from scratch; stored flags are not trusted."""
    try:
        return (
            cert.poly.degree == cert.target.n
            and len(cert.points) == cert.target.rows
            and dope_matrix(cert.poly, cert.points) == cert.target
        )
    except (ValueError, ArithmeticError):
        return False
