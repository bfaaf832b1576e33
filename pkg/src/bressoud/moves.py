"""The elementary transformations: forward/backward moves, (k-1)-insertion and
separation, (k-1)-combination and division, and the membership predicates that
gate them."""

from __future__ import annotations

from .core import (
    NEG_INF,
    ZERO_BAR,
    BressoudParams,
    Overpartition,
    Part,
    f_count,
    floor_div_eta,
    part_cmp,
    shift,
    sort_parts,
    vbar_upto,
    within_span,
)
from .marking import (
    EVEN,
    ODD,
    Marking,
    all_ksets,
    gordon_marking,
    kset_of,
    kset_type,
    marked_positions,
    max_mark,
    reverse_gordon_marking,
)


class MoveError(ValueError):
    pass


def _shift_positions(pi: Overpartition, positions: list[int], delta: int) -> Overpartition:
    parts = list(pi)
    for pos in positions:
        parts[pos] = shift(parts[pos], delta)
    return sort_parts(parts)


def forward_move(pi: Overpartition, p: int, params: BressoudParams) -> Overpartition:
    """phi_p: add eta to each of the p largest (k-1)-marked parts of the
    reverse Gordon marking."""
    eta, k = params.eta, params.k
    rm = reverse_gordon_marking(pi, eta)
    if max_mark(rm) > k - 1:
        raise MoveError("reverse marking exceeds k-1 marks")
    rpos = marked_positions(rm, k - 1)
    if p > len(rpos):
        raise MoveError("order exceeds marked count")
    return _shift_positions(pi, rpos[:p], eta)


def backward_move(omega: Overpartition, p: int, params: BressoudParams) -> Overpartition:
    """psi_p: subtract eta from each of the p largest (k-1)-marked parts of the
    Gordon marking, after checking admissibility."""
    eta, k = params.eta, params.k
    alpha1 = params.alphas[0] if params.alphas else eta
    gm = gordon_marking(omega, eta)
    if max_mark(gm) > k - 1:
        raise MoveError("Gordon marking exceeds k-1 marks")
    gpos = marked_positions(gm, k - 1)
    if p > len(gpos):
        raise MoveError("order exceeds marked count")
    gp = omega[gpos[p - 1]]
    # (a) g~_p - eta must still be a legal part.  The smallest admissible
    # residue part is alpha1 overlined; without residue classes the smallest
    # part is eta itself, so the bound drops to the non-overlined 2*eta.
    floor_key = (eta + alpha1, True) if params.alphas else (2 * eta, False)
    if (gp.magnitude, gp.overlined) < floor_key:
        raise MoveError("backward move inadmissible (a): g~_p too small")
    # (b) no (k-1)-set may sit entirely inside [g~_p - 2eta, g~_p)
    # (left end open when g~_p is overlined).
    lo_key = (gp.magnitude - 2 * eta, gp.overlined)
    hi_key = (gp.magnitude, gp.overlined)
    for s in all_ksets(omega, k, eta):
        top_key = (omega[s[0]].magnitude, omega[s[0]].overlined)
        bot_key = (omega[s[-1]].magnitude, omega[s[-1]].overlined)
        inside_low = bot_key > lo_key if gp.overlined else bot_key >= lo_key
        if top_key < hi_key and inside_low:
            raise MoveError("backward move inadmissible (b): blocking (k-1)-set")
    return _shift_positions(omega, gpos[:p], -eta)


def _rtilde_ksets(pi: Overpartition, params: BressoudParams) -> list[tuple[int, ...]]:
    rm = reverse_gordon_marking(pi, params.eta)
    return [kset_of(pi, rm, pos, params.k) for pos in marked_positions(rm, params.k - 1)]


def in_Bs(gamma: Overpartition, N: int, p: int, params: BressoudParams) -> bool:
    return _in_Bs_or_Bd(gamma, N, p, params, same=True)


def in_Bd(gamma: Overpartition, N: int, p: int, params: BressoudParams) -> bool:
    return _in_Bs_or_Bd(gamma, N, p, params, same=False)


def _in_Bs_or_Bd(gamma, N, p, params, *, same):
    """B_s: the first p reverse (k-1)-sets all have the same type as
    {r~_{p+1}}; B_d: all the opposite type. {r~_{N+1}} is deemed even."""
    ksets = _rtilde_ksets(gamma, params)
    if len(ksets) != N or not (1 <= p <= N):
        return False
    ref = kset_type(ksets[p], params, gamma) if p < N else EVEN
    want = ref if same else (ODD if ref == EVEN else EVEN)
    return all(kset_type(ksets[i], params, gamma) == want for i in range(p))


def insert_kminus1(pi: Overpartition, q: int, a: int, params: BressoudParams) -> Overpartition:
    """I_{q*eta+a}: forward move of the least admissible order p, then insert
    the overlined part (q-p)*eta + a."""
    eta, k = params.eta, params.k
    rm = reverse_gordon_marking(pi, eta)
    rpos = marked_positions(rm, k - 1)
    N = len(rpos)
    if q < N:
        raise MoveError("not in Bbar_<: q < N")
    p = None
    for cand in range(N + 1):
        rt = pi[rpos[cand]] if cand < N else NEG_INF
        if ((q - cand) * eta + a, True) >= (rt.magnitude + eta, rt.overlined):
            p = cand
            break
    if p is None:
        raise MoveError("no admissible order for insertion")
    new_part = Part((q - p) * eta + a, True)
    biggest = _largest_overlined_in_class(pi, a, eta)
    if biggest is not None and part_cmp(biggest, new_part) >= 0:
        raise MoveError("not in Bbar_<: overlined part in the way")
    if a in params.alphas and q == N and f_count(pi, 0, eta) == params.r - 1:
        # with a full small-part budget the order-N move must push a part
        # out of (0, eta], else the inserted a-bar would overflow it
        rN = pi[rpos[N - 1]] if N else None
        if rN is None or (rN.magnitude, rN.overlined) > (eta, False):
            raise MoveError("not in Bbar_<: small-part budget full")
    moved = forward_move(pi, p, params) if p else pi
    return sort_parts(moved + (new_part,))


def _largest_overlined_in_class(pi: Overpartition, a: int, eta: int) -> Part | None:
    for p in pi:
        if p.overlined and p.magnitude % eta == a % eta:
            return p
    return None


def separate_kminus1(omega: Overpartition, a: int, params: BressoudParams) -> tuple[Overpartition, int]:
    """SP: remove the largest overlined part congruent to a mod eta, then the
    backward move of the least order p with g~_{p+1} below that part.
    Returns (result, q) with q*eta + a the removed weight."""
    eta, k = params.eta, params.k
    top = _largest_overlined_in_class(omega, a, eta)
    if top is None:
        raise MoveError("no overlined part in the residue class")
    s = (top.magnitude - a) // eta
    parts = list(omega)
    parts.remove(top)
    under = tuple(parts)
    gm = gordon_marking(under, eta)
    gpos = marked_positions(gm, k - 1)
    p = len(gpos)
    for cand in range(len(gpos)):
        gt = under[gpos[cand]]
        if (gt.magnitude, gt.overlined) < (top.magnitude, top.overlined):
            p = cand
            break
    result = backward_move(under, p, params) if p else under
    return result, s + p


def successive_order_check(labels: list[int]) -> bool:
    """Labels s_b + p_b produced by successive separations must strictly decrease."""
    return all(labels[i] > labels[i + 1] for i in range(len(labels) - 1))


def ol(pi: Overpartition, eta: int) -> Part:
    """Largest overlined part divisible by eta; the sentinel 0bar if none."""
    for p in pi:
        if p.overlined and p.magnitude % eta == 0:
            return p
    return ZERO_BAR


def rtilde1(pi: Overpartition, params: BressoudParams) -> Part:
    """Largest (k-1)-marked part of the reverse Gordon marking; -inf if none."""
    rm = reverse_gordon_marking(pi, params.eta)
    rpos = marked_positions(rm, params.k - 1)
    return pi[rpos[0]] if rpos else NEG_INF


def in_Ibar_less(pi: Overpartition, p: int, params: BressoudParams) -> bool:
    eta = params.eta
    o = ol(pi, eta)
    r1 = rtilde1(pi, params)
    return (o.magnitude, o.overlined) < (p * eta, True) and (
        (r1.magnitude, r1.overlined) <= ((p - 1) * eta, True)
    )


def in_Ibar_eq(omega: Overpartition, p: int, params: BressoudParams) -> bool:
    eta = params.eta
    o = ol(omega, eta)
    r1 = rtilde1(omega, params)
    ko, kr = (o.magnitude, o.overlined), (r1.magnitude, r1.overlined)
    if ko > (p * eta, True) or kr > (p * eta, True):
        return False
    return ko == (p * eta, True) or ((p - 1) * eta, True) < kr <= (p * eta, True)


def _combine_goes_plain(pi: Overpartition, p: int, params: BressoudParams) -> bool:
    """Both conditions of the (k-1)-combination: when they hold, p*eta is
    inserted non-overlined, otherwise overlined."""
    eta, k, r = params.eta, params.k, params.r
    if p == 1:
        if not f_count(pi, 0, eta) < r - 1:
            return False
    else:
        if not f_count(pi, (p - 1) * eta, p * eta, closed_lo=True) < k - 1:
            return False
    # Condition 2: k-2 consecutive parts inside (((p-1)eta)bar, (p+1)eta]
    # spanning at most eta (strictly when the top is overlined) whose floor sum
    # has the right parity.
    lo_key = ((p - 1) * eta, True)
    hi_key = ((p + 1) * eta, False)
    idx = [i for i, x in enumerate(pi) if lo_key < (x.magnitude, x.overlined) <= hi_key]
    need = k - 2
    if need == 0:
        # Degenerate window: the empty sum decides by parity alone.
        return (p + r - 1 + vbar_upto(pi, Part(p * eta, False))) % 2 == 0
    for t in range(len(idx) - need + 1):
        win = idx[t : t + need]
        if win[-1] - win[0] != need - 1:
            continue  # must be consecutive parts of pi
        top, bot = pi[win[0]], pi[win[-1]]
        if not within_span(top, bot, eta):
            continue
        total = sum(floor_div_eta(pi[i], eta) for i in win)
        return (total - (p + r - 1 + vbar_upto(pi, top))) % 2 == 0
    return False


def combine(pi: Overpartition, p: int, params: BressoudParams) -> Overpartition:
    """C_{p*eta}: insert p*eta, overlined or not as the parity conditions direct."""
    if not in_Ibar_less(pi, p, params):
        raise MoveError("not in Ibar_<")
    plain = _combine_goes_plain(pi, p, params)
    return sort_parts(pi + (Part(p * params.eta, not plain),))


def divide(omega: Overpartition, p: int, params: BressoudParams) -> Overpartition:
    """D_{p*eta}: remove (p*eta)bar when it is the top eta-divisible overline,
    else a non-overlined p*eta."""
    if not in_Ibar_eq(omega, p, params):
        raise MoveError("not in Ibar_=")
    eta = params.eta
    target = Part(p * eta, True) if ol(omega, eta) == Part(p * eta, True) else Part(p * eta, False)
    parts = list(omega)
    try:
        parts.remove(target)
    except ValueError:
        raise MoveError(f"expected part {target} absent") from None
    return tuple(parts)
