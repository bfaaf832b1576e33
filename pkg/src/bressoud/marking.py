"""Gordon marking, reverse Gordon marking, (k-1)-sets and their even/odd type."""

from __future__ import annotations

from typing import NamedTuple

from .core import (
    BressoudParams,
    Overpartition,
    Part,
    floor_div_eta,
    vbar_upto,
    within_span,
    le_with_cap,
)


class Marking(NamedTuple):
    pi: Overpartition
    marks: tuple[int, ...]
    direction: str  # "gordon" | "reverse"
    eta: int


# A (k-1)-set is stored as the tuple of positions of its parts in pi, ascending
# (so the first position holds the largest part). Positions, not values: equal
# magnitudes stay distinguishable.
KSet = tuple[int, ...]

EVEN, ODD = "even", "odd"


def gordon_marking(pi: Overpartition, eta: int) -> Marking:
    """Assign marks from the smallest part up.

    The mark of a part is the least positive integer not used on the already
    marked smaller parts lying within eta below it (strictly within when the
    part is overlined).
    """
    n = len(pi)
    marks = [0] * n
    for i in range(n - 1, -1, -1):
        used = set()
        for p in range(i + 1, n):
            if not within_span(pi[i], pi[p], eta):
                break  # sorted descending, so no later part qualifies either
            used.add(marks[p])
        m = 1
        while m in used:
            m += 1
        marks[i] = m
    return Marking(pi, tuple(marks), "gordon", eta)


def reverse_gordon_marking(pi: Overpartition, eta: int) -> Marking:
    """Assign marks from the largest part down; window is the parts within eta above."""
    n = len(pi)
    marks = [0] * n
    for i in range(n):
        used = set()
        for p in range(i - 1, -1, -1):
            if not le_with_cap(pi[i], pi[p], eta):
                break
            used.add(marks[p])
        m = 1
        while m in used:
            m += 1
        marks[i] = m
    return Marking(pi, tuple(marks), "reverse", eta)


def max_mark(m: Marking) -> int:
    return max(m.marks, default=0)


def marked_positions(m: Marking, level: int) -> list[int]:
    """Positions of the parts carrying the given mark; ascending positions,
    which is descending part order: element i-1 is g~_i (or r~_i)."""
    return [i for i, mk in enumerate(m.marks) if mk == level]


def marked_parts(m: Marking, level: int) -> list[Part]:
    return [m.pi[i] for i in marked_positions(m, level)]


def kset_of(pi: Overpartition, marking: Marking, pos: int, k: int) -> KSet:
    """The (k-1)-set of the (k-1)-marked part at position pos.

    For the Gordon direction it is that part plus the k-2 parts directly below
    it in the listing (all within eta); for the reverse direction, the k-2
    parts directly above. Both windows provably hold exactly k-2 companions.
    """
    if marking.marks[pos] != k - 1:
        raise ValueError(f"part at position {pos} is not ({k - 1})-marked")
    if marking.direction == "gordon":
        positions = tuple(range(pos, pos + k - 1))
        if positions[-1] >= len(pi):
            raise ValueError("inconsistent marking: window runs off the end")
        if k >= 3 and not within_span(pi[positions[0]], pi[positions[-1]], marking.eta):
            raise ValueError("inconsistent marking: window exceeds eta span")
    else:
        positions = tuple(range(pos - (k - 2), pos + 1))
        if positions[0] < 0:
            raise ValueError("inconsistent marking: window runs off the start")
        if k >= 3 and not within_span(pi[positions[0]], pi[positions[-1]], marking.eta):
            raise ValueError("inconsistent marking: window exceeds eta span")
    return positions


def all_ksets(pi: Overpartition, k: int, eta: int) -> list[KSet]:
    """All windows of k-1 consecutive parts spanning at most eta
    (strictly less when the top part is overlined)."""
    out = []
    for i in range(len(pi) - (k - 2)):
        jmax = i + k - 2
        if jmax >= len(pi):
            continue
        if within_span(pi[i], pi[jmax], eta):
            out.append(tuple(range(i, jmax + 1)))
    return out


def kset_type(s: KSet, params: BressoudParams, pi: Overpartition) -> str:
    """Even iff sum of [part/eta] over the set is congruent to
    r - 1 + Vbar(largest part) mod 2."""
    eta, r = params.eta, params.r
    total = sum(floor_div_eta(pi[i], eta) for i in s)
    target = r - 1 + vbar_upto(pi, pi[s[0]])
    return EVEN if (total - target) % 2 == 0 else ODD
