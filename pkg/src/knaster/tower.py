"""Lift construction through tent maps and the recursive map towers.

The kernel takes a map f0 of [0, 1] onto itself and integers (m, n, q, i)
with (m+2)q <= n, and produces a lift f1 satisfying tent(m)∘f1 = f0∘tent(n)
whose full sweep of [0, 1] happens inside [i/q, (i+1)/q], with the rest of
the domain pinned near 0 (left of the window) or near 1 (right of it).

Iterating the kernel with q = level index and i = slot_index(t, j) yields,
for each rational parameter t, a tower of interval maps {f_j} commuting
with the two bonding sequences. Towers are never materialized eagerly: the
lap count of f_j grows like n_1*...*n_j, so each level stores only its fold
points plus two tracked preimages, and evaluation descends the levels.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .plmap import (
    ONE,
    ZERO,
    PLMap,
    RatLike,
    as_rat,
    compose,
    leftmost_preimage,
    range_on,
    tent,
    tent_preimages,
    wave_eval,
)
from .seqs import GroupedSeq, SeqSpec, regroup

DEFAULT_LAP_BUDGET = 10 ** 6


class LapBudgetError(ValueError):
    """Materializing this level would exceed the allowed lap bound."""


def slot_index(t: RatLike, j: int) -> int:
    """Index of the window [i/j, (i+1)/j] containing t (floor, clamped at j-1)."""
    t = as_rat(t)
    if not ZERO <= t <= ONE:
        raise ValueError(f"{t} outside [0, 1]")
    if j < 1:
        raise ValueError("level must be positive")
    return min(math.floor(t * j), j - 1)


def branch_apply(lam: int, y: Fraction, m: int) -> Fraction:
    """Inverse branch of tent(m) landing on leg lam (0-based)."""
    num, den = y.numerator, y.denominator
    if lam % 2 == 0:
        return Fraction(lam * den + num, m * den)
    return Fraction((lam + 1) * den - num, m * den)


@dataclass(frozen=True)
class LiftSpec:
    """Input of the lift kernel: tent degrees m (target) and n (source), the
    sweep window [i/q, (i+1)/q], and the onto map f0 being lifted."""

    m: int
    n: int
    q: int
    i: int
    f0: PLMap

    def validate(self) -> None:
        if min(self.m, self.n, self.q) < 1:
            raise ValueError("m, n and q must be positive")
        if not 0 <= self.i < self.q:
            raise ValueError(f"need 0 <= i < q, got i={self.i}, q={self.q}")
        # (m+2)q <= n guarantees the fold window fits the sweep window for
        # every i; the construction itself only needs the fit, which is
        # checked exactly (k depends on i), so degenerate cases like
        # m=1, n=2, q=1 stay admissible.
        k = -(-self.n * self.i // self.q)
        if (k + self.m + 1) * self.q > (self.i + 1) * self.n:
            raise ValueError(
                f"fold window [{k}/{self.n}, {k + self.m + 1}/{self.n}] does not fit "
                f"inside [{self.i}/{self.q}, {self.i + 1}/{self.q}]; "
                f"(m+2)q <= n guarantees the fit")


def _fold_points(n: int, k: int, m: int, a: Fraction, b: Fraction) -> tuple[Fraction, ...]:
    """Points t_0 < ... < t_m with tent(n)(t_lam) = a (lam even) or b (lam odd),
    t_lam inside the leg [(k+lam)/n, (k+lam+1)/n]."""
    pts = []
    for lam in range(m + 1):
        c = k + lam
        target = a if lam % 2 == 0 else b
        x = Fraction(c + target, n) if c % 2 == 0 else Fraction(c + 1 - target, n)
        pts.append(x)
    for u, v in zip(pts, pts[1:]):
        assert u < v, "fold points must increase strictly"
    assert ZERO <= pts[0] and pts[-1] <= ONE
    return tuple(pts)


def _fold_into_branches(base: PLMap, boundaries, m: int) -> PLMap:
    """Glue the inverse branches of tent(m) over base, switching legs at the
    given boundary points (where base hits 1 or 0 alternately)."""
    boundaries = list(boundaries)
    merged: list[tuple[Fraction, Fraction]] = []
    bi = 0
    for x, y in base.points:
        while bi < len(boundaries) and boundaries[bi] < x:
            merged.append((boundaries[bi], base(boundaries[bi])))
            bi += 1
        if bi < len(boundaries) and boundaries[bi] == x:
            bi += 1
        merged.append((x, y))
    return PLMap(
        [(x, branch_apply(bisect_right(boundaries, x), y, m)) for x, y in merged])


def construct_lift(spec: LiftSpec) -> PLMap:
    """The lift f1 with tent(m)∘f1 = f0∘tent(n), sweeping inside [i/q, (i+1)/q].

    Deterministic choices: a and b are the leftmost preimages of 0 and 1
    under f0, and k is the least nonnegative integer with k/n >= i/q. On each
    span between consecutive fold points t_lam the lift is the lam-th inverse
    branch of tent(m) applied to f0∘tent(n).
    """
    spec.validate()
    f0 = spec.f0
    a = leftmost_preimage(f0, ZERO)
    b = leftmost_preimage(f0, ONE)
    if a is None or b is None:
        raise ValueError("f0 must map [0, 1] onto itself")
    k = -(-spec.n * spec.i // spec.q)
    folds = _fold_points(spec.n, k, spec.m, a, b)
    base = compose(f0, tent(spec.n))
    return _fold_into_branches(base, folds[1:spec.m], spec.m)


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the five lift conclusions; commutes is None when skipped."""

    fixes_origin: bool
    commutes: bool | None
    low_confined: bool
    sweeps_all: bool
    high_confined: bool

    @property
    def all_ok(self) -> bool:
        return all(v is not False for v in (
            self.fixes_origin, self.commutes, self.low_confined,
            self.sweeps_all, self.high_confined))

    def as_dict(self) -> dict[str, bool | None]:
        return {
            "fixes_origin": self.fixes_origin,
            "commutes": self.commutes,
            "low_confined": self.low_confined,
            "sweeps_all": self.sweeps_all,
            "high_confined": self.high_confined,
        }


def check_conditions(f1: PLMap, spec: LiftSpec) -> ConditionReport:
    """Exact check of the five lift conclusions for f1 against spec."""
    m, n, q, i, f0 = spec.m, spec.n, spec.q, spec.i, spec.f0
    win_lo, win_hi = Fraction(i, q), Fraction(i + 1, q)
    fixes_origin = f0(ZERO) != ZERO or f1(ZERO) == ZERO
    commutes = compose(f0, tent(n)) == compose(tent(m), f1)
    low_confined = range_on(f1, ZERO, win_lo)[1] <= Fraction(1, m)
    sweeps_all = range_on(f1, win_lo, win_hi) == (ZERO, ONE)
    high_confined = range_on(f1, win_hi, ONE)[0] >= Fraction(m - 1, m)
    return ConditionReport(fixes_origin, commutes, low_confined, sweeps_all, high_confined)


@dataclass(frozen=True)
class LevelData:
    """Fold data of one tower level.

    a and b are the leftmost preimages of 0 and 1 under the previous level's
    map (a is always 0 in a tower). b_self and zmax_self track this level's
    own leftmost 1-preimage and rightmost 0-preimage; they are what the next
    level needs, so towers never have to materialize anything.
    """

    j: int
    n: int
    m: int
    slot: int
    k: int
    a: Fraction
    b: Fraction
    folds: tuple[Fraction, ...]
    b_self: Fraction
    zmax_self: Fraction

    @property
    def boundaries(self) -> tuple[Fraction, ...]:
        """Branch-switch points t_1..t_{m-1}."""
        return self.folds[1:self.m]


class Tower:
    """The family {f_j} for fixed (raw source sequence, target sequence, t).

    Levels hold O(m_j) rationals each. Evaluation is lazy; materialization is
    opt-in and guarded by an explicit lap budget. Construction is sequential,
    evaluation afterwards is pure.
    """

    def __init__(self, raw_source: SeqSpec, target: SeqSpec, t: Fraction,
                 grouped: GroupedSeq, levels):
        self.raw_source = raw_source
        self.target = target
        self.t = t
        self.grouped = grouped
        self.levels: tuple[LevelData, ...] = tuple(levels)
        self._materialized: dict[int, PLMap] = {}
        self._range_memo: dict = {}

    @property
    def depth(self) -> int:
        return len(self.levels)

    def level(self, j: int) -> LevelData:
        if not 1 <= j <= self.depth:
            raise ValueError(f"level {j} not built (depth {self.depth})")
        return self.levels[j - 1]


def build_tower(raw_source: SeqSpec, target: SeqSpec, t: RatLike, depth: int) -> Tower:
    """Build level data for f_1..f_depth over the regrouped source sequence."""
    t = as_rat(t)
    if not ZERO <= t <= ONE:
        raise ValueError(f"parameter {t} outside [0, 1]")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    grouped = regroup(raw_source, target, depth)
    levels = []
    b_prev, z_prev = ONE, ZERO
    for j in range(1, depth + 1):
        n, m = grouped.nth(j), target.nth(j)
        assert (m + 2) * j < n, "regrouping must enforce the strict level bound"
        slot = slot_index(t, j)
        k = -(-n * slot // j)
        folds = _fold_points(n, k, m, ZERO, b_prev)
        # Where this level's map first reaches 1: past fold t_{m-1} the map is
        # the top branch, so it hits 1 when the previous map (evaluated on the
        # tent leg) next hits 1 (m odd) or 0 (m even).
        if m % 2 == 1:
            b_self = folds[m - 1] + Fraction(b_prev, n)
        elif (k + m - 1) % 2 == 0:
            b_self = Fraction(k + m + 1 - z_prev, n)
        else:
            b_self = Fraction(k + m - z_prev, n)
        # Zeros live left of t_1 only; the rightmost one mirrors the previous
        # level's rightmost zero through the adjacent tent leg.
        if (k + 1) % 2 == 0:
            z_self = Fraction(k + 1 + z_prev, n)
        else:
            z_self = Fraction(k + z_prev, n)
        levels.append(LevelData(j=j, n=n, m=m, slot=slot, k=k, a=ZERO, b=b_prev,
                                folds=folds, b_self=b_self, zmax_self=z_self))
        b_prev, z_prev = b_self, z_self
    return Tower(raw_source, target, t, grouped, levels)


def eval_level(tower: Tower, j: int, x: RatLike) -> Fraction:
    """f_j(x), computed by descending the levels (no materialization)."""
    x = as_rat(x)
    if not ZERO <= x <= ONE:
        raise ValueError(f"{x} outside [0, 1]")
    if not 0 <= j <= tower.depth:
        raise ValueError(f"level {j} not built (depth {tower.depth})")
    legs = []
    for lvl in reversed(tower.levels[:j]):
        boundaries = lvl.boundaries
        legs.append((bisect_right(boundaries, x), lvl.m))
        x = wave_eval(lvl.n * x)
    y = x
    for lam, m in reversed(legs):
        y = branch_apply(lam, y, m)
    return y


def materialize_level(tower: Tower, j: int, lap_budget: int = DEFAULT_LAP_BUDGET) -> PLMap:
    """Explicit canonical PLMap equal to f_j; refuses when n_1*...*n_j > budget."""
    if not 0 <= j <= tower.depth:
        raise ValueError(f"level {j} not built (depth {tower.depth})")
    estimate = tower.grouped.prefix_product(j)
    if estimate > lap_budget:
        raise LapBudgetError(
            f"estimated lap {estimate} at level {j} exceeds budget {lap_budget}")
    cache = tower._materialized
    if 0 not in cache:
        cache[0] = tent(1)
    start = max(i for i in cache if i <= j)
    f = cache[start]
    for idx in range(start + 1, j + 1):
        lvl = tower.levels[idx - 1]
        f = _fold_into_branches(compose(f, tent(lvl.n)), lvl.boundaries, lvl.m)
        cache[idx] = f
    return cache[j]


def level_range(tower: Tower, j: int, lo: RatLike, hi: RatLike) -> tuple[Fraction, Fraction]:
    """Exact (min, max) of f_j over [lo, hi], computed lazily.

    The interval is cut at this level's branch boundaries and tent folds;
    interior pieces cover a full tent leg and reduce to the previous level's
    range over [0, 1], which is memoized, so the work stays linear in the
    total number of legs touched.
    """
    lo, hi = as_rat(lo), as_rat(hi)
    if not ZERO <= lo <= hi <= ONE:
        raise ValueError(f"bad interval [{lo}, {hi}]")
    if not 0 <= j <= tower.depth:
        raise ValueError(f"level {j} not built (depth {tower.depth})")
    return _level_range(tower, j, lo, hi)


def _level_range(tower: Tower, j: int, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    if j == 0:
        return (lo, hi)
    if lo == hi:
        v = eval_level(tower, j, lo)
        return (v, v)
    key = (j, lo, hi)
    memo = tower._range_memo
    hit = memo.get(key)
    if hit is not None:
        return hit
    lvl = tower.levels[j - 1]
    boundaries = lvl.boundaries
    cuts = {lo, hi}
    cuts.update(t for t in boundaries if lo < t < hi)
    cuts.update(Fraction(c, lvl.n)
                for c in range(math.floor(lo * lvl.n) + 1, math.ceil(hi * lvl.n)))
    cuts = sorted(cuts)
    rmin = rmax = None
    for p, q in zip(cuts, cuts[1:]):
        lam = bisect_right(boundaries, p)
        u1, u2 = wave_eval(lvl.n * p), wave_eval(lvl.n * q)
        if u1 > u2:
            u1, u2 = u2, u1
        r1, r2 = _level_range(tower, j - 1, u1, u2)
        w1, w2 = branch_apply(lam, r1, lvl.m), branch_apply(lam, r2, lvl.m)
        if w1 > w2:
            w1, w2 = w2, w1
        if rmin is None or w1 < rmin:
            rmin = w1
        if rmax is None or w2 > rmax:
            rmax = w2
    memo[key] = (rmin, rmax)
    return rmin, rmax


def commutes_pointwise(tower: Tower, j: int, x: RatLike) -> bool:
    """Check f_{j-1}(tent(n_j)(x)) == tent(m_j)(f_j(x)) at one point, lazily."""
    x = as_rat(x)
    lvl = tower.level(j)
    lhs = eval_level(tower, j - 1, wave_eval(lvl.n * x))
    rhs = wave_eval(lvl.m * eval_level(tower, j, x))
    return lhs == rhs


def check_level_conditions(tower: Tower, j: int) -> ConditionReport:
    """Exact conditions 1, 3, 4, 5 at level j via lazy range queries.

    The commuting identity (condition 2) is not checked here; use
    commutes_pointwise or compare materialized compositions when feasible.
    """
    lvl = tower.level(j)
    win_lo = Fraction(lvl.slot, j)
    win_hi = Fraction(lvl.slot + 1, j)
    fixes_origin = eval_level(tower, j, ZERO) == ZERO
    low_confined = level_range(tower, j, ZERO, win_lo)[1] <= Fraction(1, lvl.m)
    sweeps_all = level_range(tower, j, win_lo, win_hi) == (ZERO, ONE)
    high_confined = level_range(tower, j, win_hi, ONE)[0] >= Fraction(lvl.m - 1, lvl.m)
    return ConditionReport(fixes_origin, None, low_confined, sweeps_all, high_confined)


def enumerate_lifts(h: PLMap, m: int, cap: int) -> list[PLMap]:
    """Distinct continuous maps f with tent(m)∘f = h, at most cap of them.

    Depth-first over the branch choices available where h hits 0 or 1. At a
    branch point the continuation that keeps f's current direction is tried
    first (so monotone lifts such as tent(k) for h = tent(m*k) come out
    early); with no direction yet, the smaller-valued continuation goes
    first. Initial values run over tent(m)^{-1}(h(0)) in increasing order.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError("tent index must be a positive integer")
    if cap < 1:
        raise ValueError("cap must be positive")
    xs = h.xs
    ys = [y for _, y in h.points]
    last = len(xs) - 1
    out: list[PLMap] = []

    def descend(idx: int, vals: list[Fraction], direction: int) -> bool:
        if idx == last:
            out.append(PLMap(list(zip(xs, vals))))
            return len(out) < cap
        v = vals[-1]
        y0, y1 = ys[idx], ys[idx + 1]
        if y0 != ZERO and y0 != ONE:
            legs = [math.floor(v * m)]  # interior of a single leg, no choice
        else:
            c = int(v * m)  # v sits exactly on fold c/m
            if y1 == y0:
                legs = [min(c, m - 1)]  # constant run, both branches agree
            else:
                pair = [c, c - 1] if direction > 0 else [c - 1, c]
                legs = [leg for leg in pair if 0 <= leg <= m - 1]
        for leg in legs:
            w = branch_apply(leg, y1, m)
            nd = direction if w == v else (1 if w > v else -1)
            if not descend(idx + 1, vals + [w], nd):
                return False
        return True

    for v0 in tent_preimages(m, ys[0]):
        if not descend(0, [v0], 0):
            break
    return out
