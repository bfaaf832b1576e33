"""The two composite weight-preserving bijections.

phi/psi pair distinct eta-multiples with one difference-condition class to land
in the overlined class with the parity condition dropped; phi0/psi0 do the dual
job for the class that keeps the parity condition.
"""

from __future__ import annotations

from math import ceil

from .core import (
    NEG_INF,
    ZERO_BAR,
    BressoudParams,
    DistinctEtaPartition,
    Overpartition,
)
from .marking import EVEN, gordon_marking, kset_of, kset_type, marked_positions
from .moves import (
    MoveError,
    backward_move,
    combine,
    divide,
    forward_move,
    insert_kminus1,
    ol,
    rtilde1,
    separate_kminus1,
    successive_order_check,
)


class PhiTrace(list):
    """Ordered (operation, overpartition) snapshots of a bijection run."""


def chi_r_eq_k(params: BressoudParams) -> int:
    return 1 if params.r == params.k else 0


def _check_zeta(zeta: DistinctEtaPartition, eta: int) -> list[int]:
    vals = [z // eta for z in zeta]
    for z in zeta:
        if z <= 0 or z % eta:
            raise ValueError("zeta parts must be positive multiples of eta")
    if any(vals[i] <= vals[i + 1] for i in range(len(vals) - 1)):
        raise ValueError("zeta parts must be strictly decreasing")
    return vals


def _record(trace: list | None, op: str, snapshot: Overpartition) -> None:
    if trace is not None:
        trace.append((op, snapshot))


def phi(
    zeta: DistinctEtaPartition,
    mu: Overpartition,
    params: BressoudParams,
    trace: list | None = None,
) -> Overpartition:
    eta = params.eta
    vals = _check_zeta(zeta, eta)
    gm = gordon_marking(mu, eta)
    N = len(marked_positions(gm, params.k - 1))
    big = [v for v in vals if v > N]
    small = [v for v in vals if v <= N]
    cur = mu
    _record(trace, "start", cur)
    # Step 1: the parts not exceeding N*eta enter through forward moves,
    # largest first.
    for v in small:
        cur = forward_move(cur, v, params)
        _record(trace, f"forward p={v}", cur)
    # Step 2: the remaining parts enter through (k-1)-insertions with a=eta,
    # smallest first, each creating one overlined eta-divisible part.
    for v in reversed(big):
        cur = insert_kminus1(cur, v - 1, eta, params)
        _record(trace, f"insert {v * eta}", cur)
    return cur


def psi(
    pi: Overpartition,
    params: BressoudParams,
    trace: list | None = None,
) -> tuple[DistinctEtaPartition, Overpartition]:
    eta, k = params.eta, params.k
    cur = pi
    _record(trace, "start", cur)
    # Step 1: strip every overlined eta-divisible part, largest first, via
    # (k-1)-separations. Labels must strictly decrease.
    big_labels: list[int] = []
    while ol(cur, eta) != ZERO_BAR:
        cur, q = separate_kminus1(cur, eta, params)
        big_labels.append(q + 1)
        _record(trace, f"separate {(q + 1) * eta}", cur)
    if not successive_order_check(big_labels):
        raise MoveError("separation labels failed to decrease")
    # Step 2: backward moves until every Gordon (k-1)-set is even.
    small_labels: list[int] = []
    gm = gordon_marking(cur, eta)
    N = len(marked_positions(gm, k - 1))
    for _ in range(N + 1):
        gm = gordon_marking(cur, eta)
        gpos = marked_positions(gm, k - 1)
        types = [kset_type(kset_of(cur, gm, pos, k), params, cur) for pos in gpos]
        q = None
        for i in range(len(types)):
            nxt = types[i + 1] if i + 1 < len(types) else EVEN
            if types[i] != nxt:
                q = i + 1
                break
        if q is None:
            break
        cur = backward_move(cur, q, params)
        small_labels.append(q)
        _record(trace, f"backward p={q}", cur)
    else:
        raise MoveError("backward phase exceeded its bound")
    if any(small_labels[i] >= small_labels[i + 1] for i in range(len(small_labels) - 1)):
        raise MoveError("backward labels failed to increase")
    labels = big_labels + small_labels[::-1]
    zeta = tuple(v * eta for v in labels)
    _check_zeta(zeta, eta)
    return zeta, cur


def phi0(
    zeta: DistinctEtaPartition,
    mu: Overpartition,
    params: BressoudParams,
    trace: list | None = None,
) -> Overpartition:
    vals = _check_zeta(zeta, params.eta)
    cur = mu
    _record(trace, "start", cur)
    for v in reversed(vals):
        cur = combine(cur, v, params)
        _record(trace, f"combine {v * params.eta}", cur)
    return cur


def psi0(
    omega: Overpartition,
    params: BressoudParams,
    trace: list | None = None,
) -> tuple[DistinctEtaPartition, Overpartition]:
    eta = params.eta
    cur = omega
    _record(trace, "start", cur)
    labels: list[int] = []
    while True:
        o = ol(cur, eta)
        r1 = rtilde1(cur, params)
        if o == ZERO_BAR and r1 == NEG_INF:
            break
        cands = []
        if o != ZERO_BAR:
            cands.append(ceil(o.magnitude / eta))
        if r1 != NEG_INF:
            cands.append(ceil(r1.magnitude / eta))
        v = max(cands)
        if labels and labels[-1] <= v:
            raise MoveError("division labels failed to decrease")
        cur = divide(cur, v, params)
        labels.append(v)
        _record(trace, f"divide {v * eta}", cur)
    zeta = tuple(v * eta for v in labels)
    return zeta, cur
