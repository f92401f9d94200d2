"""Exact algebra of continuous piecewise-linear self-maps of [0, 1].

Every coordinate is a `fractions.Fraction`, so evaluation, composition,
lap counting and range queries are exact; there is no floating-point mode.
The generators are the stretch-and-fold maps `tent(n)`: n monotone legs of
slope +-n whose values alternate 0, 1, 0, ... at the fold points k/n.

Composition towers blow up: lap counts multiply, so the hot paths here
(bisection, interpolation, collinearity) work on numerator/denominator
pairs directly instead of going through Fraction operator dispatch.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rat(x: RatLike) -> Fraction:
    """Coerce to an exact rational; floats are rejected on purpose."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) or isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def wave_eval(t: RatLike) -> Fraction:
    """The 2-periodic triangular wave: fractional part on even floors, reflected on odd."""
    t = as_rat(t)
    k = math.floor(t)
    u = t - k
    return u if k % 2 == 0 else ONE - u


def _lt(a: Fraction, b: Fraction) -> bool:
    return a.numerator * b.denominator < b.numerator * a.denominator


def _bisect_right(xs, x: Fraction, lo: int = 0, hi: int | None = None) -> int:
    """bisect.bisect_right with integer cross-multiplied comparisons."""
    if hi is None:
        hi = len(xs)
    xn, xd = x.numerator, x.denominator
    while lo < hi:
        mid = (lo + hi) // 2
        v = xs[mid]
        if v.numerator * xd <= xn * v.denominator:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _bisect_left(xs, x: Fraction, lo: int = 0, hi: int | None = None) -> int:
    if hi is None:
        hi = len(xs)
    xn, xd = x.numerator, x.denominator
    while lo < hi:
        mid = (lo + hi) // 2
        v = xs[mid]
        if v.numerator * xd < xn * v.denominator:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _interpolate(x: Fraction, x0: Fraction, y0: Fraction,
                 x1: Fraction, y1: Fraction) -> Fraction:
    """y0 + (y1 - y0) * (x - x0) / (x1 - x0), one normalization at the end."""
    a = x.numerator * x0.denominator - x0.numerator * x.denominator
    b = x.denominator * x0.denominator
    c = x1.numerator * x0.denominator - x0.numerator * x1.denominator
    d = x1.denominator * x0.denominator
    e = y1.numerator * y0.denominator - y0.numerator * y1.denominator
    f = y1.denominator * y0.denominator
    return Fraction(y0.numerator * f * b * c + y0.denominator * e * a * d,
                    y0.denominator * f * b * c)


def _collinear(p, q, r) -> bool:
    (px, py), (qx, qy), (rx, ry) = p, q, r
    a1 = qy.numerator * py.denominator - py.numerator * qy.denominator
    b1 = py.denominator * qy.denominator
    a2 = rx.numerator * qx.denominator - qx.numerator * rx.denominator
    b2 = qx.denominator * rx.denominator
    a3 = ry.numerator * qy.denominator - qy.numerator * ry.denominator
    b3 = qy.denominator * ry.denominator
    a4 = qx.numerator * px.denominator - px.numerator * qx.denominator
    b4 = px.denominator * qx.denominator
    return a1 * a2 * b3 * b4 == a3 * a4 * b1 * b2


class PLMap:
    """A continuous piecewise-linear map [0, 1] -> [0, 1] in canonical form.

    Breakpoint x-coordinates increase strictly from 0 to 1, values stay in
    [0, 1], and no three consecutive breakpoints are collinear (construction
    merges such runs). Equality is therefore equality of breakpoint tuples.
    Instances are immutable; all operations return new maps.
    """

    __slots__ = ("points", "xs")

    def __init__(self, points: Iterable[tuple[RatLike, RatLike]]):
        pts = [(as_rat(x), as_rat(y)) for x, y in points]
        if len(pts) < 2:
            raise ValueError("a map needs at least two breakpoints")
        if pts[0][0] != ZERO or pts[-1][0] != ONE:
            raise ValueError("breakpoints must start at x=0 and end at x=1")
        prev_n, prev_d = 0, 1  # x = 0
        first = True
        for x, y in pts:
            if not first and x.numerator * prev_d <= prev_n * x.denominator:
                raise ValueError(
                    f"x-coordinates must increase strictly (at x = {x})")
            prev_n, prev_d = x.numerator, x.denominator
            first = False
            if y.numerator < 0 or y.numerator > y.denominator:
                raise ValueError(f"value {y} outside [0, 1]")
        merged: list[tuple[Fraction, Fraction]] = [pts[0]]
        for pt in pts[1:]:
            while len(merged) >= 2 and _collinear(merged[-2], merged[-1], pt):
                merged.pop()
            merged.append(pt)
        self.points: tuple[tuple[Fraction, Fraction], ...] = tuple(merged)
        self.xs: list[Fraction] = [x for x, _ in merged]

    def _eval_unchecked(self, x: Fraction) -> Fraction:
        i = _bisect_right(self.xs, x) - 1
        if i == len(self.xs) - 1:
            return self.points[-1][1]
        (x0, y0), (x1, y1) = self.points[i], self.points[i + 1]
        if x0.numerator * x.denominator == x.numerator * x0.denominator:
            return y0
        return _interpolate(x, x0, y0, x1, y1)

    def __call__(self, x: RatLike) -> Fraction:
        x = as_rat(x)
        if x.numerator < 0 or x.numerator > x.denominator:
            raise ValueError(f"{x} outside [0, 1]")
        return self._eval_unchecked(x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PLMap):
            return NotImplemented
        return self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        inside = ", ".join(f"({x}, {y})" for x, y in self.points)
        return f"PLMap([{inside}])"


def normalize(points) -> PLMap:
    """Canonical form of a breakpoint list; a PLMap is already canonical."""
    if isinstance(points, PLMap):
        return points
    return PLMap(points)


def identity() -> PLMap:
    return PLMap([(ZERO, ZERO), (ONE, ONE)])


@lru_cache(maxsize=None)
def tent(n: int) -> PLMap:
    """The n-fold stretch-and-fold map t -> wave_eval(n*t)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("tent index must be a positive integer")
    return PLMap([(Fraction(k, n), ONE if k % 2 else ZERO) for k in range(n + 1)])


def compose(outer: PLMap, inner: PLMap) -> PLMap:
    """Exact composition outer(inner(x)), refined at all slope changes."""
    out_xs = outer.xs
    out_pts = outer.points
    pts: list[tuple[Fraction, Fraction]] = []
    ipts = inner.points
    for (x0, y0), (x1, y1) in zip(ipts, ipts[1:]):
        pts.append((x0, outer._eval_unchecked(y0)))
        if y1 == y0:
            continue
        if _lt(y0, y1):
            idxs = range(_bisect_right(out_xs, y0), _bisect_left(out_xs, y1))
        else:
            lo = _bisect_right(out_xs, y1)
            hi = _bisect_left(out_xs, y0)
            idxs = range(hi - 1, lo - 1, -1)
        if not idxs:
            continue
        # x = x0 + (u - y0) * (x1 - x0) / (y1 - y0), in integer pieces
        sn = x1.numerator * x0.denominator - x0.numerator * x1.denominator
        sd = x1.denominator * x0.denominator
        en = y1.numerator * y0.denominator - y0.numerator * y1.denominator
        ed = y1.denominator * y0.denominator
        for idx in idxs:
            u = out_xs[idx]
            gn = u.numerator * y0.denominator - y0.numerator * u.denominator
            gd = u.denominator * y0.denominator
            num = x0.numerator * gd * sd * en + x0.denominator * gn * sn * ed
            den = x0.denominator * gd * sd * en
            pts.append((Fraction(num, den), out_pts[idx][1]))
    pts.append((ONE, outer._eval_unchecked(ipts[-1][1])))
    return PLMap(pts)


def lap(f: PLMap) -> int:
    """Number of maximal monotone pieces; constant runs join a neighbour."""
    signs = []
    for (_, y0), (_, y1) in zip(f.points, f.points[1:]):
        if y1 != y0:
            signs.append(y1 > y0)
    if not signs:
        return 1
    return 1 + sum(1 for s0, s1 in zip(signs, signs[1:]) if s0 != s1)


def range_on(f: PLMap, a: RatLike, b: RatLike) -> tuple[Fraction, Fraction]:
    """Exact (min, max) of f over [a, b]."""
    a, b = as_rat(a), as_rat(b)
    if not ZERO <= a <= b <= ONE:
        raise ValueError(f"bad interval [{a}, {b}]")
    va, vb = f._eval_unchecked(a), f._eval_unchecked(b)
    if _lt(vb, va):
        lo, hi = vb, va
    else:
        lo, hi = va, vb
    for i in range(_bisect_right(f.xs, a), _bisect_left(f.xs, b)):
        y = f.points[i][1]
        if _lt(y, lo):
            lo = y
        elif _lt(hi, y):
            hi = y
    return lo, hi


def leftmost_preimage(f: PLMap, y: RatLike) -> Fraction | None:
    """Smallest x with f(x) = y, or None when y is not attained."""
    y = as_rat(y)
    for (x0, y0), (x1, y1) in zip(f.points, f.points[1:]):
        if y0 == y:
            return x0
        if y0 != y1 and min(y0, y1) <= y <= max(y0, y1):
            return x0 + (x1 - x0) * (y - y0) / (y1 - y0)
    if f.points[-1][1] == y:
        return ONE
    return None


def rightmost_preimage(f: PLMap, y: RatLike) -> Fraction | None:
    """Largest x with f(x) = y, or None when y is not attained."""
    y = as_rat(y)
    rev = f.points[::-1]
    for (x1, y1), (x0, y0) in zip(rev, rev[1:]):
        if y1 == y:
            return x1
        if y0 != y1 and min(y0, y1) <= y <= max(y0, y1):
            return x0 + (x1 - x0) * (y - y0) / (y1 - y0)
    if f.points[0][1] == y:
        return ZERO
    return None


def is_onto(f: PLMap) -> bool:
    return range_on(f, ZERO, ONE) == (ZERO, ONE)


def tent_preimages(n: int, y: RatLike) -> list[Fraction]:
    """All solutions of tent(n)(x) = y, in increasing order."""
    y = as_rat(y)
    if not ZERO <= y <= ONE:
        raise ValueError(f"{y} outside [0, 1]")
    if not isinstance(n, int) or n < 1:
        raise ValueError("tent index must be a positive integer")
    xs = set()
    for c in range(n):
        xs.add(Fraction(c + y, n) if c % 2 == 0 else Fraction(c + 1 - y, n))
    return sorted(xs)
