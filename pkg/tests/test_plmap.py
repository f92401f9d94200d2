import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knaster import (
    PLMap,
    compose,
    identity,
    lap,
    leftmost_preimage,
    normalize,
    range_on,
    rightmost_preimage,
    tent,
    tent_preimages,
    wave_eval,
)

F = Fraction


def rationals(rng, den_max=1000):
    den = rng.randint(1, den_max)
    return F(rng.randint(-3 * den, 3 * den), den)


@st.composite
def plmaps(draw):
    n_interior = draw(st.integers(min_value=0, max_value=6))
    xs = sorted(draw(st.sets(st.fractions(min_value=F(1, 40), max_value=F(39, 40),
                                          max_denominator=40),
                             min_size=n_interior, max_size=n_interior)))
    ys = [draw(st.fractions(min_value=0, max_value=1, max_denominator=24))
          for _ in range(n_interior + 2)]
    return PLMap(list(zip([F(0)] + xs + [F(1)], ys)))


# ----------------------------------------------------------------- wave

def test_wave_examples():
    assert wave_eval(0) == 0
    assert wave_eval(F(3, 2)) == F(1, 2)
    assert wave_eval(7) == 1


def test_wave_periodicity_and_symmetry():
    rng = random.Random(20240901)
    for _ in range(100):
        t = rationals(rng)
        assert wave_eval(t + 2) == wave_eval(t)
        assert wave_eval(-t) == wave_eval(t)
        assert 0 <= wave_eval(t) <= 1


# ----------------------------------------------------------------- tent

def test_tent_identity():
    assert tent(1).points == ((F(0), F(0)), (F(1), F(1)))
    assert tent(1) == identity()


def test_tent_rooftop():
    assert tent(2).points == ((F(0), F(0)), (F(1, 2), F(1)), (F(1), F(0)))


def test_tent_seven():
    assert tent(7)(F(3, 7)) == 1
    assert lap(tent(7)) == 7


def test_tent_rejects_zero():
    with pytest.raises(ValueError):
        tent(0)


def test_tent_matches_wave():
    rng = random.Random(3)
    for n in range(1, 10):
        g = tent(n)
        for _ in range(20):
            x = F(rng.randint(0, 720), 720)
            assert g(x) == wave_eval(n * x)


# ----------------------------------------------------------------- eval

def test_eval_examples(f1_star):
    assert tent(2)(F(1, 4)) == F(1, 2)
    assert tent(3)(F(1, 2)) == F(1, 2)
    assert f1_star(F(6, 7)) == F(2, 3)


def test_eval_rejects_outside_domain():
    with pytest.raises(ValueError):
        tent(2)(F(3, 2))
    with pytest.raises(ValueError):
        tent(2)(F(-1, 2))


def test_eval_rejects_floats():
    with pytest.raises(TypeError):
        tent(2)(0.25)
    with pytest.raises(TypeError):
        PLMap([(0, 0), (0.5, 0.5), (1, 1)])


def test_rational_like_inputs():
    assert wave_eval("7/2") == F(1, 2)
    assert wave_eval(-3) == 1
    assert tent(2)("1/4") == F(1, 2)


# -------------------------------------------------------------- compose

def test_compose_semigroup_small():
    assert compose(tent(2), tent(3)) == tent(6)
    assert compose(tent(3), tent(2)) == tent(6)
    assert compose(tent(4), tent(5)) == tent(20)


def test_compose_identity(f1_star):
    for f in (tent(5), f1_star):
        assert compose(tent(1), f) == f
        assert compose(f, tent(1)) == f


def test_compose_condition_two(f1_star):
    assert compose(tent(3), f1_star) == tent(7)


def test_eval_compose_coherence_tents():
    rng = random.Random(99)
    for _ in range(100):
        f = tent(rng.randint(2, 9))
        g = tent(rng.randint(2, 9))
        x = F(rng.randint(0, 5039), 5040)
        assert compose(f, g)(x) == f(g(x))


@settings(max_examples=60, deadline=None)
@given(plmaps(), plmaps(), st.fractions(min_value=0, max_value=1, max_denominator=97))
def test_eval_compose_coherence_random(f, g, x):
    assert compose(f, g)(x) == f(g(x))


# ------------------------------------------------------------------ lap

def test_lap_tents():
    for n in range(1, 13):
        assert lap(tent(n)) == n


def test_lap_identity_and_example(f1_star):
    assert lap(identity()) == 1
    assert lap(f1_star) == 5


def test_lap_constant_pieces():
    stair = PLMap([(0, 0), (F(1, 4), F(1, 2)), (F(1, 2), F(1, 2)), (1, 1)])
    assert lap(stair) == 1
    bump = PLMap([(0, 0), (F(1, 4), F(1, 2)), (F(1, 2), F(1, 2)), (1, 0)])
    assert lap(bump) == 2
    flat = PLMap([(0, F(1, 3)), (1, F(1, 3))])
    assert lap(flat) == 1


def test_lap_submultiplicative_tents_exact():
    for m in range(2, 7):
        for n in range(2, 7):
            assert lap(compose(tent(m), tent(n))) == lap(tent(m)) * lap(tent(n))


@settings(max_examples=60, deadline=None)
@given(plmaps(), plmaps())
def test_lap_submultiplicative_random(f, g):
    assert lap(compose(f, g)) <= lap(f) * lap(g)


# ------------------------------------------------------------- range_on

def test_range_examples(f1_star):
    assert range_on(tent(3), F(1, 3), F(2, 3)) == (F(0), F(1))
    assert range_on(f1_star, F(3, 7), F(1)) == (F(2, 3), F(1))
    c = F(5, 11)
    assert range_on(f1_star, c, c) == (f1_star(c), f1_star(c))


def test_range_rejects_reversed():
    with pytest.raises(ValueError):
        range_on(tent(2), F(2, 3), F(1, 3))


@settings(max_examples=60, deadline=None)
@given(plmaps(),
       st.fractions(min_value=0, max_value=1, max_denominator=30),
       st.fractions(min_value=0, max_value=1, max_denominator=30))
def test_range_on_brute_force(f, a, b):
    if a > b:
        a, b = b, a
    lo, hi = range_on(f, a, b)
    # brute-force oracle: sample the interval endpoints, breakpoints, and a grid
    candidates = [a, b] + [x for x in f.xs if a <= x <= b]
    grid = [a + (b - a) * F(k, 17) for k in range(18)]
    values = [f(x) for x in candidates + grid]
    assert lo == min(values)
    assert hi == max(values)
    assert min(values) >= lo and max(values) <= hi


# ------------------------------------------------------------ normalize

def test_normalize_merges_spec_example():
    raw = [(0, 0), (F(1, 7), F(1, 3)), (F(2, 7), F(2, 3)), (F(3, 7), 1),
           (F(4, 7), F(2, 3)), (F(5, 7), 1), (F(6, 7), F(2, 3)), (1, 1)]
    expect = [(F(0), F(0)), (F(3, 7), F(1)), (F(4, 7), F(2, 3)),
              (F(5, 7), F(1)), (F(6, 7), F(2, 3)), (F(1), F(1))]
    assert normalize(raw).points == tuple(expect)


def test_normalize_identity_unchanged():
    assert normalize([(0, 0), (1, 1)]).points == ((F(0), F(0)), (F(1), F(1)))


def test_normalize_collinear_midpoint():
    assert normalize([(0, 0), (F(1, 2), F(1, 2)), (1, 1)]) == identity()


def test_normalize_rejects_bad_lists():
    with pytest.raises(ValueError):
        PLMap([(0, 0), (0, 1), (1, 0)])  # duplicate x
    with pytest.raises(ValueError):
        PLMap([(0, 0), (F(2, 3), 1), (F(1, 3), 0), (1, 1)])  # decreasing x
    with pytest.raises(ValueError):
        PLMap([(0, 0), (1, 2)])  # value out of range
    with pytest.raises(ValueError):
        PLMap([(F(1, 4), 0), (1, 1)])  # does not start at 0


@settings(max_examples=60, deadline=None)
@given(plmaps())
def test_normalize_idempotent(f):
    assert normalize(f.points) == f
    assert normalize(normalize(f)) == normalize(f)


# ---------------------------------------------------------- preimages

def test_preimage_scans(f1_star):
    assert leftmost_preimage(f1_star, 1) == F(3, 7)
    assert rightmost_preimage(f1_star, 0) == 0
    assert leftmost_preimage(tent(2), F(1, 2)) == F(1, 4)
    assert rightmost_preimage(tent(2), F(1, 2)) == F(3, 4)
    assert leftmost_preimage(tent(2), F(1)) == F(1, 2)
    assert leftmost_preimage(identity(), F(1, 3)) == F(1, 3)
    missing = PLMap([(0, 0), (1, F(1, 2))])
    assert leftmost_preimage(missing, 1) is None


def test_tent_preimages_fan():
    assert tent_preimages(2, F(1, 2)) == [F(1, 4), F(3, 4)]
    assert tent_preimages(2, F(0)) == [F(0), F(1)]
    assert tent_preimages(2, F(1)) == [F(1, 2)]
    for n in (2, 3, 5, 8):
        for y in (F(0), F(1), F(2, 5)):
            pts = tent_preimages(n, y)
            assert pts == sorted(pts)
            assert all(wave_eval(n * x) == y for x in pts)
            if y == 0:
                assert len(pts) == n // 2 + 1
            elif y == 1:
                assert len(pts) == (n + 1) // 2
            else:
                assert len(pts) == n
