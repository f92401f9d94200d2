from dataclasses import replace
from fractions import Fraction

import pytest

from knaster import (
    SeqSpec,
    build_tower,
    eval_level,
    make_certificate,
    pick_level,
    pick_q,
    regroup,
    verify_certificate,
    wave_eval,
)

F = Fraction
c2 = SeqSpec.constant(2)


def test_pick_level_examples():
    assert pick_level(F(0), F(1, 2), 4, c2) == 7
    assert pick_level(F(0), F(1), 1, c2) == 4


def test_pick_level_strictness():
    # 3/6 == 1/2 must not qualify, the inequality is strict
    assert pick_level(F(0), F(1, 2), 1, c2) == 7


def test_pick_level_rejects_degenerate():
    with pytest.raises(ValueError):
        pick_level(F(1, 2), F(1, 2), 4, c2)
    with pytest.raises(ValueError):
        pick_level(F(2, 3), F(1, 3), 4, c2)
    with pytest.raises(ValueError):
        pick_level(F(0), F(1), 0, c2)


def test_pick_q_desk():
    grouped = regroup(c2, c2, 7)
    q, witness = pick_q(F(0), 7, grouped)
    assert (q, witness) == (3, F(3, 16))
    # witness is an even fold point of tent(n_7)
    assert wave_eval(grouped.nth(7) * witness) == 0


def test_pick_q_window():
    grouped = regroup(c2, c2, 9)
    for j in range(2, 10):
        for num in range(8):
            t = F(num, 8)
            from knaster import slot_index
            slot = slot_index(t, j)
            q, witness = pick_q(t, j, grouped)
            assert F(slot + 1, j) <= witness <= F(slot + 2, j)
            assert witness == F(2 * q, grouped.nth(j))
            # least such q
            if witness > F(slot + 1, j):
                assert F(2 * (q - 1), grouped.nth(j)) < F(slot + 1, j)


def test_pick_q_clamped_top_slot():
    grouped = regroup(c2, c2, 2)  # n_2 = 16
    q, witness = pick_q(F(1), 2, grouped)
    assert witness == 1 and q == 8


def test_pick_q_odd_n_top_slot_fails():
    grouped = regroup(SeqSpec.constant(3), c2, 1)  # n_1 = 9, slot = 0 = j-1
    with pytest.raises(ValueError):
        pick_q(F(1), 1, grouped)


def test_certificate_desk_frozen():
    cert = make_certificate(c2, c2, F(0), F(1, 2), 4)
    assert cert.j == 7
    assert cert.q == 3
    assert cert.witness == F(3, 16)
    assert cert.p == 64
    assert cert.r == 128
    assert cert.vs == 0
    assert cert.vt >= F(1, 2)
    assert verify_certificate(cert, c2, c2)


def test_certificate_small_ell():
    cert = make_certificate(c2, c2, F(0), F(1), 1)
    assert cert.j == 4 and cert.p == 8
    assert verify_certificate(cert, c2, c2)


def test_certificate_swapped_inputs():
    assert make_certificate(c2, c2, F(1, 2), F(0), 4) == \
        make_certificate(c2, c2, F(0), F(1, 2), 4)


def test_certificate_rejects_equal_parameters():
    with pytest.raises(ValueError):
        make_certificate(c2, c2, F(1, 4), F(1, 4), 4)


def test_exact_zero_chain():
    # the witness maps to 0 under tent(n_j), and the s-tower value is a zero
    # of tent(m_j) pinned into [0, 1/m_j]
    t, s, ell = F(0), F(1, 2), 4
    cert = make_certificate(c2, c2, t, s, ell)
    tower_s = build_tower(c2, c2, s, cert.j)
    lvl = tower_s.level(cert.j)
    assert wave_eval(lvl.n * cert.witness) == 0
    assert eval_level(tower_s, cert.j - 1, wave_eval(lvl.n * cert.witness)) == 0
    assert wave_eval(lvl.m * eval_level(tower_s, cert.j, cert.witness)) == 0


def test_monotone_budget():
    cert = make_certificate(c2, c2, F(0), F(1, 2), 4)
    for ell in (1, 2, 3):
        assert verify_certificate(replace(cert, ell=ell), c2, c2)


def test_verify_rejects_tampering():
    cert = make_certificate(c2, c2, F(0), F(1, 2), 4)
    assert not verify_certificate(replace(cert, vs=F(1, 128)), c2, c2)
    assert not verify_certificate(replace(cert, ell=cert.p), c2, c2)
    assert not verify_certificate(replace(cert, ell=cert.p + 5), c2, c2)
    assert not verify_certificate(replace(cert, vt=F(1, 3)), c2, c2)
    assert not verify_certificate(replace(cert, witness=F(5, 16)), c2, c2)
    assert not verify_certificate(replace(cert, q=cert.q + 1), c2, c2)
    assert not verify_certificate(replace(cert, p=cert.p * 2), c2, c2)
    assert not verify_certificate(replace(cert, r=cert.r + 1), c2, c2)
    assert not verify_certificate(replace(cert, j=cert.j + 1), c2, c2)
    assert not verify_certificate(replace(cert, s=cert.t), c2, c2)


def test_verify_wrong_sequences():
    cert = make_certificate(c2, c2, F(0), F(1, 2), 4)
    assert not verify_certificate(cert, SeqSpec.constant(3), c2)
    # and a finite source that cannot be regrouped deep enough
    assert not verify_certificate(cert, SeqSpec.from_list([2, 2, 2]), c2)


def test_requested_level_override():
    cert = make_certificate(c2, c2, F(0), F(1, 2), 4, level=9)
    assert cert.j == 9
    assert verify_certificate(cert, c2, c2)
    with pytest.raises(ValueError):
        make_certificate(c2, c2, F(0), F(1, 2), 4, level=6)  # 3/6 not < 1/2
    with pytest.raises(ValueError):
        make_certificate(c2, c2, F(0), F(1, 2), 4, level=0)


def test_certificates_over_mixed_sequences():
    raw = SeqSpec.periodic([3], [2, 5])
    target = SeqSpec.periodic([2], [3])
    cert = make_certificate(raw, target, F(1, 8), F(3, 4), 2)
    assert verify_certificate(cert, raw, target)
    assert cert.vs == 0
