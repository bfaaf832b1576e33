"""Membership validators and brute-force enumeration for every partition and
overpartition family. Deliberately the dumb oracle: no shortcuts."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .core import (
    BressoudParams,
    Overpartition,
    Part,
    f_count,
    ge_with_gap,
    sort_parts,
    weight,
)
from .marking import EVEN, all_ksets, kset_type

FamilyId = str
FAMILIES = ("A", "B", "Abar", "Bbar", "D_eta")


def _residues(params: BressoudParams) -> set[int]:
    return {0} | {a % params.eta for a in params.alphas}


def _bbar_conditions(pi: Overpartition, params: BressoudParams, j: int) -> bool:
    eta, k, r = params.eta, params.k, params.r
    res = _residues(params)
    for p in pi:
        if p.magnitude % eta not in res:
            return False
        if not p.overlined and p.magnitude % eta != 0:
            return False
    for i in range(len(pi) - (k - 1)):
        if not ge_with_gap(pi[i], pi[i + k - 1], eta):
            return False
    if f_count(pi, 0, eta) > r - 1:
        return False
    if j == 0:
        for s in all_ksets(pi, k, eta):
            if kset_type(s, params, pi) != EVEN:
                return False
    return True


def is_Bbar(pi: Overpartition, params: BressoudParams, j: int) -> bool:
    return _bbar_conditions(pi, params, j)


def to_b_representation(parts: tuple[int, ...], eta: int) -> Overpartition:
    """Overline each part not divisible by eta; the standard identification of
    an ordinary difference-condition partition with an overpartition."""
    return sort_parts(Part(m, m % eta != 0) for m in parts)


def is_B(parts: tuple[int, ...], params: BressoudParams, j: int) -> bool:
    eta = params.eta
    nondiv = [m for m in parts if m % eta]
    if len(nondiv) != len(set(nondiv)):
        return False  # only multiples of eta may be repeated
    return _bbar_conditions(to_b_representation(parts, eta), params, j)


def _check_odd_lambda(params: BressoudParams) -> None:
    if params.lam % 2 == 1 and params.eta % 2 == 1:
        raise ValueError("odd lambda requires even eta")


def _a_rules(params: BressoudParams, j: int):
    """Returns (repeatable, plain_ok) predicates on magnitudes for the A and
    Abar congruence families."""
    eta, k, r, lam = params.eta, params.k, params.r, params.lam
    if lam % 2 == 0:
        mod = eta * (2 * k - lam + j)
        bad = {0, (eta * (r - lam // 2)) % mod, (-eta * (r - lam // 2)) % mod}
        return (lambda m: m % eta == 0), (lambda m: m % mod not in bad)
    _check_odd_lambda(params)
    h = eta // 2
    t = eta * (2 * r - lam) // 2
    if j == 1:
        mod = eta * (2 * k - lam + 1)
        bad = {0, t % mod, (-t) % mod}
        return (lambda m: m % h == 0), (
            lambda m: m % (2 * eta) != eta and m % mod not in bad
        )
    mod = eta * (2 * k - lam)
    bad = {t % mod, (-t) % mod}
    half_excl = (eta * (2 * k - lam) // 2) % mod
    return (
        lambda m: m % h == 0 and m % mod != half_excl
    ), (
        lambda m: m % (2 * eta) != eta
        and m % (2 * mod) != 0
        and m % mod not in bad
    )


def is_A(parts: tuple[int, ...], params: BressoudParams, j: int) -> bool:
    res = _residues(params)
    repeatable, value_ok = _a_rules(params, j)
    counts: dict[int, int] = {}
    for m in parts:
        counts[m] = counts.get(m, 0) + 1
    for m, c in counts.items():
        if m % params.eta not in res:
            return False
        if not value_ok(m):
            return False
        if c > 1 and not repeatable(m):
            return False
    return True


def _abar_rules(params: BressoudParams, j: int):
    """(plain_ok, overlined_ok) predicates on magnitudes for Abar_j."""
    eta, k, r, lam = params.eta, params.k, params.r, params.lam
    if lam % 2 == 0:
        mod = eta * (2 * k - lam + j - 1)
        bad = {0, (eta * (r - lam // 2)) % mod, (-eta * (r - lam // 2)) % mod}
        return (lambda m: m % eta == 0 and m % mod not in bad), (lambda m: True)
    _check_odd_lambda(params)
    h = eta // 2
    t = eta * (2 * r - lam) // 2
    if j == 1:
        mod = eta * (2 * k - lam)
        half_res = (eta * (2 * k - lam) // 2) % mod
        bad = {t % mod, (-t) % mod}

        def plain_ok(m: int) -> bool:
            return (
                m % h == 0
                and m % mod != half_res
                and m % (2 * eta) != eta
                and m % (2 * mod) != 0
                and m % mod not in bad
            )

        def over_ok(m: int) -> bool:
            if m % eta == h:
                return m % mod == half_res
            return True

        return plain_ok, over_ok
    mod = eta * (2 * k - lam - 1)
    bad = {0, t % mod, (-t) % mod}

    def plain_ok0(m: int) -> bool:
        return m % h == 0 and m % (2 * eta) != eta and m % mod not in bad

    def over_ok0(m: int) -> bool:
        return m % eta != h

    return plain_ok0, over_ok0


def is_Abar(pi: Overpartition, params: BressoudParams, j: int) -> bool:
    res = _residues(params)
    plain_ok, over_ok = _abar_rules(params, j)
    for p in pi:
        if p.magnitude % params.eta not in res:
            return False
        if p.overlined:
            if not over_ok(p.magnitude):
                return False
        elif not plain_ok(p.magnitude):
            return False
    return True


def _iter_overpartitions(
    n_max: int,
    allowed_mag,
    allow_plain,
    allow_over,
) -> Iterator[Overpartition]:
    """All overpartitions of weight <= n_max, descending generation; trailing
    filters applied by the caller."""

    stack: list[Part] = []

    def rec(prev_key, remaining) -> Iterator[Overpartition]:
        yield tuple(stack)
        start = min(remaining, prev_key[0])
        for mag in range(start, 0, -1):
            if not allowed_mag(mag):
                continue
            for over in (True, False):
                if (mag, over) > prev_key:
                    continue
                if over and not allow_over(mag):
                    continue
                if not over and not allow_plain(mag):
                    continue
                if over and stack and stack[-1] == Part(mag, True):
                    continue
                stack.append(Part(mag, over))
                yield from rec((mag, over), remaining - mag)
                stack.pop()

    yield from rec((n_max, True), n_max)


def members_upto(family: str, params: BressoudParams, j: int, n_max: int) -> list[Overpartition]:
    """Every member of the family with weight at most n_max.

    Families "B" and "Bbar" yield overpartitions ("B" in the overlined
    representation, i.e. without eta-divisible overlines); "A"/"Abar"
    likewise; "D_eta" yields tuples of plain parts.
    """
    eta, k, r = params.eta, params.k, params.r
    res = _residues(params)
    out: list[Overpartition] = []
    if family == "D_eta":
        mags = [m for m in range(eta, n_max + 1, eta)]

        def rec_d(i: int, remaining: int, acc: list[int]):
            out.append(tuple(acc))
            for t in range(i, len(mags)):
                if mags[t] > remaining:
                    break
                acc.append(mags[t])
                rec_d(t + 1, remaining - mags[t], acc)
                acc.pop()

        rec_d(0, n_max, [])
        return [tuple(sorted(x, reverse=True)) for x in out]

    if family in ("A", "Abar"):
        plain_ok, over_ok = (
            _abar_rules(params, j)
            if family == "Abar"
            else (lambda m: True, lambda m: False)
        )
        if family == "A":
            repeatable, value_ok = _a_rules(params, j)
        for pi in _iter_overpartitions(
            n_max,
            lambda m: m % eta in res,
            (lambda m: value_ok(m)) if family == "A" else plain_ok,
            (lambda m: False) if family == "A" else over_ok,
        ):
            if family == "A":
                parts = tuple(p.magnitude for p in pi)
                if is_A(parts, params, j):
                    out.append(pi)
            else:
                out.append(pi)
        return out

    if family in ("B", "Bbar"):
        allow_over = (lambda m: True) if family == "Bbar" else (lambda m: m % eta != 0)
        allow_plain = lambda m: m % eta == 0
        small_cap = (eta, False)
        stack: list[Part] = []

        def rec(prev_key, remaining, small):
            pi = tuple(stack)
            ok = True
            if j == 0:
                for s in all_ksets(pi, k, eta):
                    if kset_type(s, params, pi) != EVEN:
                        ok = False
                        break
            if ok:
                out.append(pi)
            start = min(remaining, prev_key[0])
            for mag in range(start, 0, -1):
                if mag % eta not in res:
                    continue
                for over in (True, False):
                    key = (mag, over)
                    if key > prev_key:
                        continue
                    if over and (not allow_over(mag) or (stack and stack[-1] == Part(mag, True))):
                        continue
                    if not over and not allow_plain(mag):
                        continue
                    nsmall = small + (key <= small_cap)
                    if nsmall > r - 1:
                        continue
                    p = Part(mag, over)
                    if len(stack) >= k - 1 and not ge_with_gap(stack[-(k - 1)], p, eta):
                        continue
                    stack.append(p)
                    rec(key, remaining - mag, nsmall)
                    stack.pop()

        rec((n_max, True), n_max, 0)
        return out

    raise ValueError(f"unknown family {family}")


def _counts_b_family(family: str, params: BressoudParams, j: int, n_max: int) -> list[int]:
    """Count B or Bbar members by weight without materializing them.

    Walks parts in decreasing order.  The k-apart difference condition turns
    into a magnitude cap against the part k-1 positions back, the small-part
    budget into a floor, and each in-span window of k-1 consecutive parts
    pins the parity that the total number of overlined parts must have in
    the end; two windows pinning opposite parities kill the whole subtree.
    """
    eta, k, r = params.eta, params.k, params.r
    res = _residues(params)
    plain_res = {0}
    over_res = res if family == "Bbar" else {x for x in res if x}
    parity_on = j == 0
    counts = [0] * (n_max + 1)
    mags: list[int] = []
    overs: list[bool] = []
    ocum: list[int] = []

    def rec(prev_mag: int, prev_over: bool, remaining: int, small: int, d, wt: int):
        L = len(mags) - 1
        if parity_on and L >= k - 2:
            i = L - k + 2
            if (mags[i], overs[i]) <= (mags[L] + eta, False):
                fs = sum(mags[t] // eta for t in range(i, L + 1))
                before = ocum[i - 1] if i > 0 else 0
                c = (fs + before + r - 1) % 2
                if d is None:
                    d = c
                elif c != d:
                    return
        otot = ocum[-1] if ocum else 0
        if not parity_on or d is None or d == otot % 2:
            counts[wt] += 1
        if L + 1 >= k - 1:
            tm, tv = mags[L - k + 2], overs[L - k + 2]
            cap = tm - eta if tv else tm - eta - 1
        else:
            cap = remaining
        plain_lo = 2 * eta if small == r - 1 else eta
        over_lo = eta if small == r - 1 else 1
        for over, lo, hi, allowed in (
            (False, plain_lo, min(remaining, prev_mag, cap), plain_res),
            (True, over_lo, min(remaining, prev_mag - 1, cap), over_res),
        ):
            for m in range(hi, lo - 1, -1):
                if m % eta not in allowed:
                    continue
                nsmall = small + ((m, over) <= (eta, False))
                mags.append(m)
                overs.append(over)
                ocum.append((ocum[-1] if ocum else 0) + over)
                rec(m, over, remaining - m, nsmall, d, wt + m)
                mags.pop()
                overs.pop()
                ocum.pop()

    rec(n_max + 1, False, n_max, 0, None, 0)
    return counts


@lru_cache(maxsize=None)
def counts_upto(
    family: str, params: BressoudParams, j: int, n_max: int
) -> tuple[int, ...]:
    """counts[n] = number of members of weight exactly n, 0 <= n <= n_max."""
    if family in ("B", "Bbar"):
        return tuple(_counts_b_family(family, params, j, n_max))
    counts = [0] * (n_max + 1)
    for m in members_upto(family, params, j, n_max):
        counts[weight_of(m)] += 1
    return tuple(counts)


def weight_of(member) -> int:
    if member and isinstance(member[0], Part):
        return weight(member)
    return sum(member)


def enumerate_family(family: str, params: BressoudParams, j: int, n: int) -> list:
    return [m for m in members_upto(family, params, j, n) if weight_of(m) == n]


def count_family(family: str, params: BressoudParams, j: int, n: int) -> int:
    return counts_upto(family, params, j, n)[n]
