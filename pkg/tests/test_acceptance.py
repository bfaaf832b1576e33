"""Acceptance gate: exact desk-scale checks of every verified statement.

Each test is an exact-equality check (tolerance zero) over an enumeration or
a truncated series comparison.
"""

import time

import pytest

from bressoud.core import BressoudParams, parse_overpartition
from bressoud.bijections import phi, phi0, psi, psi0
from bressoud.classes import counts_upto, is_Bbar
from bressoud.cli import (
    check_phi0_roundtrip,
    check_phi_roundtrip,
)
from bressoud.marking import gordon_marking, reverse_gordon_marking
from bressoud.moves import forward_move
from bressoud.qseries import (
    BaileyPairSeq,
    QSeries,
    bailey_pair_check,
    bp1_pair,
    bl1_transform,
    blbp_transform,
    bpg_pair,
    chain_pair,
    corollary_lc_check,
    classical_identity_check,
    counts_series,
    gbo1_rhs,
    gen_A_series,
    monomial,
    multisum_lhs,
    pair_2k2r1,
    pochhammer,
    series_inverse,
    series_mul,
    verify_identity,
)


# --- 1. worked-example fidelity -------------------------------------------

def test_criterion_1_worked_examples():
    start = time.monotonic()
    p54 = BressoudParams(10, (1, 9), 5, 4, 1)
    pi = parse_overpartition(
        "80o,80,80,70o,70,69o,60o,60,59o,51o,50,40o,40,31o,29o,21o,20o,20,19o,10o,10,9o,1o"
    )
    assert tuple(gordon_marking(pi, 10).marks) == (
        2, 4, 1, 2, 3, 1, 2, 4, 3, 1, 2, 3, 1, 2, 1, 4, 3, 2, 1, 4, 3, 2, 1
    )
    assert tuple(reverse_gordon_marking(pi, 10).marks) == (
        1, 2, 3, 1, 4, 2, 1, 3, 2, 4, 1, 2, 3, 1, 2, 1, 3, 4, 2, 1, 3, 2, 4
    )
    assert forward_move(pi, 2, p54) == parse_overpartition(
        "80o,80,80,80,70o,69o,61o,60o,60,59o,50,40o,40,31o,29o,21o,20o,20,19o,10o,10,9o,1o"
    )

    p43 = BressoudParams(10, (3, 7), 4, 3, 1)
    mu = parse_overpartition("87o,80,80,67o,63o,57o,50,50,43o,37o,33o,30,20,20,13o,7o,3o")
    zeta = (100, 80, 50, 40, 20)
    image = parse_overpartition(
        "100o,100,97o,90,77o,73o,70,60o,57o,50,50,43o,37o,33o,30,23o,20,10o,7o,3o"
    )
    assert phi(zeta, mu, p43) == image
    assert psi(image, p43) == (zeta, mu)

    p430 = BressoudParams(10, (3, 7), 4, 3, 0)
    mu0 = parse_overpartition("23o,20,7o,3o")
    zeta0 = (50, 30, 20, 10)
    image0 = parse_overpartition("50o,30o,23o,20,20,10o,7o,3o")
    assert phi0(zeta0, mu0, p430) == image0
    assert psi0(image0, p430) == (zeta0, mu0)
    assert time.monotonic() - start < 1.0


# --- 2./3. exhaustive bijection roundtrips --------------------------------

@pytest.mark.parametrize(
    "params,W",
    [
        (BressoudParams(1, (), 3, 2, 1), 30),
        (BressoudParams(2, (1,), 3, 2, 1), 30),
        (BressoudParams(10, (3, 7), 4, 3, 1), 80),
    ],
    ids=["-;1,3,2", "1;2,3,2", "3,7;10,4,3"],
)
def test_criterion_2_phi_roundtrip(params, W):
    rep = check_phi_roundtrip(params, W)
    assert rep.status == "pass", rep.counterexample


@pytest.mark.parametrize(
    "params,W",
    [
        (BressoudParams(1, (), 4, 3, 0), 30),
        (BressoudParams(1, (), 4, 4, 0), 30),
        (BressoudParams(10, (3, 7), 4, 3, 0), 80),
    ],
    ids=["-;1,4,3", "-;1,4,4", "3,7;10,4,3"],
)
def test_criterion_3_phi0_roundtrip(params, W):
    rep = check_phi0_roundtrip(params, W)
    assert rep.status == "pass", rep.counterexample


# --- 4. congruence class equals difference class --------------------------

@pytest.mark.parametrize(
    "params,n_max",
    [
        (BressoudParams(10, (3, 7), 4, 3, 0), 80),
        (BressoudParams(2, (1,), 4, 2, 0), 40),
    ],
    ids=["3,7;10,4,3", "1;2,4,2"],
)
def test_criterion_4_abar_equals_bbar(params, n_max):
    # double enumeration, both families counted independently
    a = counts_upto("Abar", params, 0, n_max)
    b = counts_upto("Bbar", params, 0, n_max)
    assert a == b


# --- 5. the overpartition analogue of Euler's theorem ---------------------

def test_criterion_5_euler_analogue():
    params = BressoudParams(1, (), 3, 2, 0)
    T = 40
    a = counts_upto("Abar", params, 0, T)
    b = counts_upto("Bbar", params, 0, T)
    assert a == b
    num = pochhammer(-1, 1, 1, None, T)
    den = series_mul(pochhammer(1, 1, 5, None, T), pochhammer(1, 4, 5, None, T))
    product = series_mul(num, series_inverse(den, T))
    series = QSeries({n: c for n, c in enumerate(b)}, T)
    assert verify_identity(product, series).passed


# --- 6. multisum equals product -------------------------------------------

@pytest.mark.parametrize(
    "params",
    [
        BressoudParams(1, (), 3, 2, 0),
        BressoudParams(1, (), 4, 2, 0),
        BressoudParams(2, (1,), 4, 3, 0),
        BressoudParams(2, (1,), 4, 2, 0),
    ],
    ids=["-;1,3,2", "-;1,4,2", "1;2,4,3", "1;2,4,2"],
)
def test_criterion_6_multisum_equals_product(params):
    start = time.monotonic()
    rep = verify_identity(multisum_lhs(params, 100), gbo1_rhs(params, 100))
    assert rep.passed, rep.counterexample
    assert time.monotonic() - start < 60.0


# --- 7. multisum equals the class enumeration -----------------------------

@pytest.mark.parametrize(
    "params,T",
    [
        (BressoudParams(1, (), 4, 2, 0), 60),
        (BressoudParams(10, (3, 7), 4, 3, 0), 120),
    ],
    ids=["-;1,4,2", "3,7;10,4,3"],
)
def test_criterion_7_sum_side(params, T):
    rep = verify_identity(multisum_lhs(params, T), counts_series("Bbar", params, 0, T))
    assert rep.passed, rep.counterexample


# --- 8. classical identities ----------------------------------------------

@pytest.mark.parametrize(
    "name,k,r,j",
    [
        ("andrews-gordon", 2, 1, 1),
        ("andrews-gordon", 2, 2, 1),
        ("andrews-gordon", 3, 2, 1),
        ("bressoud-even", 3, 2, 0),
        ("gollnitz-gordon", 2, 2, 0),
        ("gollnitz-gordon", 2, 2, 1),
    ],
)
def test_criterion_8_classical_identities(name, k, r, j):
    rep = classical_identity_check(name, k, r, j, 100)
    assert rep.passed, rep.counterexample


# --- 9. Bailey machinery ---------------------------------------------------

def test_criterion_9_base_pairs():
    assert bailey_pair_check(bp1_pair(76), 8, 60).passed
    unit2 = bl1_transform(blbp_transform(0)(bp1_pair(76)))
    assert bailey_pair_check(unit2, 8, 60).passed


@pytest.mark.parametrize("k,r", [(2, 1), (3, 1), (3, 2)])
def test_criterion_9_chain_reproduces_closed_forms(k, r):
    T = 70
    chain = chain_pair(k, r, T)
    direct = pair_2k2r1(k, r, T)
    for n in range(9):
        assert verify_identity(chain.alpha(n), direct.alpha(n)).passed
        assert verify_identity(chain.beta(n), direct.beta(n)).passed
    sym_chain = bpg_pair(k, r, T, method="chain")
    sym = bpg_pair(k, r, T)
    for n in range(9):
        assert verify_identity(sym_chain.beta(n), sym.beta(n)).passed
        assert verify_identity(sym_chain.alpha(n), sym.alpha(n)).passed


def test_criterion_9_corollary():
    rep = corollary_lc_check(BressoudParams(1, (), 3, 2, 0), 100)
    assert rep.passed, rep.counterexample


# --- 10. negative controls -------------------------------------------------

def test_criterion_10_corrupted_coefficient_detected():
    params = BressoudParams(1, (), 3, 2, 0)
    lhs = multisum_lhs(params, 40)
    rhs = gbo1_rhs(params, 40)
    bad = rhs + monomial(1, 17)
    assert verify_identity(lhs, rhs).passed
    rep = verify_identity(lhs, bad)
    assert rep.status == "fail" and rep.counterexample["exponent"] == "17"


def test_criterion_10_corrupted_move_output_detected():
    params = BressoudParams(10, (3, 7), 4, 3, 1)
    mu = parse_overpartition("87o,80,80,67o,63o,57o,50,50,43o,37o,33o,30,20,20,13o,7o,3o")
    zeta = (100, 80, 50, 40, 20)
    image = phi(zeta, mu, params)
    # tamper with one part: weight bookkeeping and class membership both flag it
    tampered = tuple(p._replace(magnitude=p.magnitude + 10) if i == 0 else p for i, p in enumerate(image))
    assert not is_Bbar(tampered, params, 1) or psi(tampered, params) != (zeta, mu)


def test_criterion_10_corrupted_beta_detected():
    base = bp1_pair(40)
    bad = BaileyPairSeq(base.alpha, lambda n: base.beta(n) * monomial(1, 1), 40, "corrupt")
    rep = bailey_pair_check(bad, 6, 30)
    assert rep.status == "fail"
    assert rep.counterexample["n"] == 0 or rep.counterexample is not None
