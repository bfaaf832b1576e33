"""Family membership predicates and the two enumeration paths."""

from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from bressoud.core import BressoudParams, parse_overpartition
from bressoud.classes import (
    _counts_b_family,
    count_family,
    counts_upto,
    enumerate_family,
    is_A,
    is_Abar,
    is_B,
    is_Bbar,
    members_upto,
    to_b_representation,
    weight_of,
)


def test_d_eta_is_distinct_multiples():
    # partitions into distinct positive multiples of eta
    counts = counts_upto("D_eta", BressoudParams(1, (), 3, 2, 0), 0, 9)
    assert counts == (1, 1, 1, 2, 2, 3, 4, 5, 6, 8)
    counts2 = counts_upto("D_eta", BressoudParams(3, (1, 2), 3, 2, 0), 0, 9)
    assert counts2 == (1, 0, 0, 1, 0, 0, 1, 0, 0, 2)


def test_bbar_small_membership():
    params = BressoudParams(10, (3, 7), 4, 3, 1)
    assert is_Bbar(parse_overpartition("23o,20,7o,3o"), params, 1)
    assert not is_Bbar(parse_overpartition("5,3"), params, 1)  # bad residue
    assert not is_Bbar(parse_overpartition("7,3o"), params, 1)  # 7 must be overlined
    # four parts <= eta overflows r-1 = 2
    assert not is_Bbar(parse_overpartition("10,7o,3o"), params, 1)


def test_overlined_eta_multiple_not_a_small_part():
    # eta-bar sits above eta, so it never spends the small-part budget
    params = BressoudParams(1, (), 3, 2, 1)
    assert is_Bbar(parse_overpartition("28,1o,1"), params, 1)
    assert not is_Bbar(parse_overpartition("28,1,1"), params, 1)


def test_parity_condition_distinguishes_j():
    params = BressoudParams(1, (), 3, 2, 0)
    pi = parse_overpartition("2,2")
    # floors 2+2 = 4 but r-1 = 1, no overlines: even set, so out at j=0
    assert not is_Bbar(pi, params, 0)
    assert is_Bbar(pi, params._replace(j=1), 1)


def test_b_representation_overlines_non_multiples():
    params = BressoudParams(10, (3, 7), 4, 3, 1)
    rep = to_b_representation((30, 23, 20, 7), 10)
    assert rep == parse_overpartition("30,23o,20,7o")


def test_euler_o_distinct_parts_remark():
    # members with no overlined parts are exactly the distinct-part partitions
    params = BressoudParams(1, (), 3, 2, 0)
    for n in range(11):
        plain = [m for m in enumerate_family("Bbar", params, 0, n) if not any(p.overlined for p in m)]
        mags = [tuple(p.magnitude for p in m) for m in plain]
        assert all(len(set(t)) == len(t) for t in mags)
    assert count_family("Bbar", params, 0, 10) == 70


@pytest.mark.parametrize("family", ["B", "Bbar"])
@pytest.mark.parametrize(
    "params",
    [
        BressoudParams(1, (), 3, 2, 0),
        BressoudParams(1, (), 4, 2, 0),
        BressoudParams(2, (1,), 4, 3, 0),
        BressoudParams(10, (3, 7), 4, 3, 0),
    ],
)
@pytest.mark.parametrize("j", [0, 1])
def test_fast_counter_matches_enumeration(family, params, j):
    W = 16 if params.eta <= 2 else 42
    slow = Counter(weight_of(m) for m in members_upto(family, params, j, W))
    fast = _counts_b_family(family, params, j, W)
    assert fast == [slow.get(n, 0) for n in range(W + 1)]


def test_members_are_validated_by_predicates():
    params = BressoudParams(2, (1,), 4, 3, 0)
    for m in members_upto("Bbar", params, 0, 14):
        assert is_Bbar(m, params, 0)
    for m in members_upto("B", params, 0, 14):
        assert is_B(tuple(p.magnitude for p in m), params, 0)
    for m in members_upto("Abar", params, 0, 14):
        assert is_Abar(m, params, 0)


def test_a_family_plain_parts_only():
    params = BressoudParams(1, (), 3, 2, 1)
    for m in members_upto("A", params, 1, 10):
        assert not any(p.overlined for p in m)
        assert is_A(tuple(p.magnitude for p in m), params, 1)
