"""Forward/backward moves, insertion/separation, combination/division."""

import pytest
from hypothesis import given, settings, strategies as st

from bressoud.core import BressoudParams, parse_overpartition, weight
from bressoud.classes import is_Bbar, members_upto
from bressoud.marking import gordon_marking, marked_positions, reverse_gordon_marking
from bressoud.moves import (
    MoveError,
    backward_move,
    combine,
    divide,
    forward_move,
    in_Ibar_less,
    insert_kminus1,
    ol,
    separate_kminus1,
)

P54 = BressoudParams(10, (1, 9), 5, 4, 1)
PI = parse_overpartition(
    "80o,80,80,70o,70,69o,60o,60,59o,51o,50,40o,40,31o,29o,21o,20o,20,19o,10o,10,9o,1o"
)


def test_forward_move_second_kind_display():
    got = forward_move(PI, 2, P54)
    assert got == parse_overpartition(
        "80o,80,80,80,70o,69o,61o,60o,60,59o,50,40o,40,31o,29o,21o,20o,20,19o,10o,10,9o,1o"
    )


def test_backward_undoes_forward():
    assert backward_move(forward_move(PI, 2, P54), 2, P54) == PI


def test_backward_move_accepts_plain_two_eta_without_residues():
    params = BressoudParams(1, (), 3, 2, 1)
    omega = parse_overpartition("26,2,2")
    assert backward_move(omega, 1, params) == parse_overpartition("26,2,1")


def test_backward_move_rejects_bottom_part():
    params = BressoudParams(1, (), 3, 2, 1)
    with pytest.raises(MoveError):
        backward_move(parse_overpartition("1,1"), 1, params)


def test_insert_creates_overlined_eta_multiple():
    params = BressoudParams(1, (), 3, 2, 1)
    pi = parse_overpartition("28,1")
    omega = insert_kminus1(pi, 0, 1, params)
    assert omega == parse_overpartition("28,1o,1")
    assert is_Bbar(omega, params, 1)


def test_separate_undoes_insert():
    params = BressoudParams(10, (3, 7), 4, 3, 1)
    tried = 0
    for pi in members_upto("Bbar", params, 1, 40):
        for q in range(0, 4):
            for a in (3, 7, 10):
                try:
                    omega = insert_kminus1(pi, q, a, params)
                except MoveError:
                    continue
                tried += 1
                assert weight(omega) == weight(pi) + q * 10 + a
                assert is_Bbar(omega, params, 1)
                back, q_back = separate_kminus1(omega, a, params)
                assert (back, q_back) == (pi, q)
    assert tried > 50


def test_combine_prefers_overlined_when_budget_full():
    # f(0, eta] already holds r-1 parts, so the eta-multiple goes in overlined
    params = BressoudParams(10, (3, 7), 4, 3, 0)
    pi = parse_overpartition("7o,3o")
    assert in_Ibar_less(pi, 1, params)
    omega = combine(pi, 1, params)
    assert omega == parse_overpartition("10o,7o,3o")


def test_divide_undoes_combine_walkthrough():
    params = BressoudParams(10, (3, 7), 4, 3, 0)
    stages = ["23o,20,7o,3o", "23o,20,10o,7o,3o", "23o,20,20,10o,7o,3o",
              "30o,23o,20,20,10o,7o,3o", "50o,30o,23o,20,20,10o,7o,3o"]
    for lo, hi, p in zip(stages, stages[1:], (1, 2, 3, 5)):
        assert combine(parse_overpartition(lo), p, params) == parse_overpartition(hi)
        assert divide(parse_overpartition(hi), p, params) == parse_overpartition(lo)


def test_ol_empty_is_zero_bar():
    part = ol((), 10)
    assert part.magnitude == 0 and part.overlined


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([BressoudParams(1, (), 3, 2, 1), BressoudParams(2, (1,), 3, 2, 1)]),
    st.integers(0, 10 ** 6),
)
def test_forward_backward_roundtrip_property(params, seed):
    members = members_upto("Bbar", params, 1, 10 * params.eta)
    pi = members[seed % len(members)]
    rm = reverse_gordon_marking(pi, params.eta)
    npos = len(marked_positions(rm, params.k - 1))
    if npos == 0:
        return
    p = 1 + seed % npos
    moved = forward_move(pi, p, params)
    assert weight(moved) == weight(pi) + p * params.eta
    assert backward_move(moved, p, params) == pi
