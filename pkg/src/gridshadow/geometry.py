"""Exact planar predicates for points with dyadic x and integer y."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import ResourceBudgetError
from .numbers import two_adic_valuation

#: Default cap on the number of columns (or rows) scanned by enumeration.
ENUMERATION_BUDGET = 1 << 20


@dataclass(frozen=True)
class ExactPoint:
    """Point (x_num / 2**x_pow2, y), stored in normalized dyadic form."""

    x_num: int
    x_pow2: int = 0
    y: int = 0

    def __post_init__(self):
        if self.x_pow2 < 0:
            raise ValueError("x_pow2 must be nonnegative")
        if self.x_pow2 and self.x_num % 2 == 0:
            if self.x_num == 0:
                shift = self.x_pow2
            else:
                shift = min(self.x_pow2, two_adic_valuation(self.x_num))
            object.__setattr__(self, "x_num", self.x_num >> shift)
            object.__setattr__(self, "x_pow2", self.x_pow2 - shift)

    @classmethod
    def from_xy(cls, x: int | Fraction, y: int) -> ExactPoint:
        x = Fraction(x)
        den = x.denominator
        if den & (den - 1):
            raise ValueError(f"x = {x} is not a dyadic rational")
        return cls(x.numerator, den.bit_length() - 1, y)

    @property
    def x(self) -> Fraction:
        return Fraction(self.x_num, 1 << self.x_pow2)

    @property
    def x_is_integer(self) -> bool:
        return self.x_pow2 == 0

    def scaled_x(self, k: int) -> int:
        """x * 2**k as an integer; requires k >= x_pow2."""
        return self.x_num << (k - self.x_pow2)


class LatticePoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class LatticeHits:
    """Integer points strictly inside a segment.

    ``witness`` is the hit with smallest x, then smallest y. ``points`` is only
    filled in by enumeration.
    """

    count: int
    witness: LatticePoint | None = None
    points: tuple[LatticePoint, ...] | None = None


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def orientation(a: ExactPoint, b: ExactPoint, c: ExactPoint) -> int:
    """+1 for a left turn a->b->c, -1 for a right turn, 0 when collinear."""
    k = max(a.x_pow2, b.x_pow2, c.x_pow2)
    ax, bx, cx = a.scaled_x(k), b.scaled_x(k), c.scaled_x(k)
    return _sign((bx - ax) * (c.y - a.y) - (b.y - a.y) * (cx - ax))


def strictly_between(a: ExactPoint, b: ExactPoint, c: ExactPoint) -> bool:
    """True iff c lies on the open segment ab."""
    if orientation(a, b, c):
        return False
    k = max(a.x_pow2, b.x_pow2, c.x_pow2)
    ax, bx, cx = a.scaled_x(k), b.scaled_x(k), c.scaled_x(k)
    if ax != bx:
        return min(ax, bx) < cx < max(ax, bx)
    return min(a.y, b.y) < c.y < max(a.y, b.y)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with a*s + b*t = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def lattice_points_strictly_between(a: ExactPoint, b: ExactPoint) -> LatticeHits:
    """Count integer points on the open segment ab via a linear Diophantine equation.

    With both x scaled by 2**k, the supporting line is
    ``(dy * 2**k) x - dX y = Xa dy - ya dX``; its integer solutions form an
    arithmetic progression, and we count the parameters landing strictly
    between the endpoints.
    """
    if a == b:
        raise ValueError("segment endpoints coincide")
    k = max(a.x_pow2, b.x_pow2)
    xa, xb = a.scaled_x(k), b.scaled_x(k)
    dX, dy = xb - xa, b.y - a.y
    alpha, beta = dy << k, -dX
    gamma = xa * dy - a.y * dX
    g, s, t = extended_gcd(alpha, beta)
    if gamma % g:
        return LatticeHits(0)
    x0, y0 = s * (gamma // g), t * (gamma // g)
    # solutions: (x0 + step_x * m, y0 + step_y * m)
    step_x, step_y = dX // g, alpha // g
    if step_x:
        ends = (Fraction(xa - (x0 << k), step_x << k), Fraction(xb - (x0 << k), step_x << k))
        ascending = step_x > 0
    else:
        ends = (Fraction(a.y - y0, step_y), Fraction(b.y - y0, step_y))
        ascending = step_y > 0
    lo, hi = min(ends), max(ends)
    first, last = _floor(lo) + 1, _ceil(hi) - 1
    count = last - first + 1
    if count <= 0:
        return LatticeHits(0)
    m = first if ascending else last
    return LatticeHits(count, LatticePoint(x0 + step_x * m, y0 + step_y * m))


def lattice_points_by_enumeration(a: ExactPoint, b: ExactPoint,
                                  budget: int = ENUMERATION_BUDGET) -> LatticeHits:
    """Reference counter: scan integer columns (rows, if vertical) between a and b."""
    if a == b:
        raise ValueError("segment endpoints coincide")
    if a.x == b.x:
        if not a.x_is_integer:
            return LatticeHits(0, None, ())
        lo, hi = sorted((a.y, b.y))
        if hi - lo - 1 > budget:
            raise ResourceBudgetError(f"{hi - lo - 1} rows exceed the enumeration budget {budget}")
        pts = tuple(LatticePoint(a.x_num, y) for y in range(lo + 1, hi))
        return LatticeHits(len(pts), pts[0] if pts else None, pts)
    if a.x > b.x:
        a, b = b, a
    k = max(a.x_pow2, b.x_pow2)
    xa, xb = a.scaled_x(k), b.scaled_x(k)
    dX, dy = xb - xa, b.y - a.y
    first = (xa >> k) + 1
    last = -((-xb) >> k) - 1
    if last - first + 1 > budget:
        raise ResourceBudgetError(f"{last - first + 1} columns exceed the enumeration budget {budget}")
    # y(s) = ya + (s*2^k - Xa) dy / dX; integral iff the numerator is 0 mod dX
    base = a.y * dX - xa * dy
    step = dy << k
    pts = []
    num = base + step * first
    for s in range(first, last + 1):
        if num % dX == 0:
            pts.append(LatticePoint(s, num // dX))
        num += step
    pts = tuple(pts)
    return LatticeHits(len(pts), pts[0] if pts else None, pts)
