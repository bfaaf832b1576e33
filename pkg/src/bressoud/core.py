"""Overpartition data model and the counting statistics used by every class definition.

Parts are totally ordered as 1 < 1bar < 2 < 2bar < ...; the lexicographic key
(magnitude, overlined) with False < True realizes exactly that order, so all
"x <= y with strict inequality if z is overlined" style comparisons reduce to
plain tuple comparisons here.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple


class Part(NamedTuple):
    magnitude: int
    overlined: bool

    def __str__(self) -> str:
        return f"{self.magnitude}o" if self.overlined else str(self.magnitude)


# Sentinel standing for r~_{N+1} = -infinity: below every real part, and stays
# below them after any realistic number of +eta shifts.
NEG_INF = Part(-(1 << 60), False)

# Sentinel for ol(pi) when pi has no overlined part divisible by eta: 0bar.
ZERO_BAR = Part(0, True)

# An overpartition is a tuple of Parts sorted weakly descending under part_cmp.
Overpartition = tuple[Part, ...]

# A partition into distinct positive multiples of eta, strictly decreasing.
DistinctEtaPartition = tuple[int, ...]


def part_cmp(a: Part, b: Part) -> int:
    """Three-way comparison under the total order 1 < 1bar < 2 < 2bar."""
    ka, kb = (a.magnitude, a.overlined), (b.magnitude, b.overlined)
    return (ka > kb) - (ka < kb)


def sort_parts(parts: Iterable[Part]) -> Overpartition:
    return tuple(sorted(parts, key=lambda p: (p.magnitude, p.overlined), reverse=True))


def validate_overpartition(pi: Overpartition) -> None:
    seen = set()
    for i, p in enumerate(pi):
        if p.magnitude < 1:
            raise ValueError(f"part magnitude < 1: {p}")
        if p.overlined:
            if p.magnitude in seen:
                raise ValueError(f"repeated overlined part {p}")
            seen.add(p.magnitude)
        if i and part_cmp(pi[i - 1], p) < 0:
            raise ValueError("parts not sorted descending")


def weight(pi: Overpartition) -> int:
    return sum(p.magnitude for p in pi)


def vbar_upto(pi: Overpartition, x: Part) -> int:
    """Number of overlined parts of pi not exceeding x in the part order."""
    return sum(1 for p in pi if p.overlined and part_cmp(p, x) <= 0)


def v_upto(pi: Overpartition, x: Part, eta: int) -> int:
    """Number of parts of pi not exceeding x that are not divisible by eta."""
    return sum(1 for p in pi if p.magnitude % eta != 0 and part_cmp(p, x) <= 0)


def f_count(pi: Overpartition, lo: int, hi: int, *, closed_lo: bool = False) -> int:
    """Number of parts in the interval (lo, hi], or [lo, hi] when closed_lo.

    The endpoints are taken as non-overlined values, and the comparison uses
    the part order, so an overlined part of magnitude hi lies above the
    interval and is not counted.
    """
    if lo > hi:
        raise ValueError("lo > hi")
    lo_key = (lo, False)
    hi_key = (hi, False)
    if closed_lo:
        return sum(1 for p in pi if lo_key <= (p.magnitude, p.overlined) <= hi_key)
    return sum(1 for p in pi if lo_key < (p.magnitude, p.overlined) <= hi_key)


def floor_div_eta(p: Part, eta: int) -> int:
    return p.magnitude // eta


def shift(p: Part, delta: int) -> Part:
    """Change the magnitude by delta (a multiple of eta), keeping the overline."""
    m = p.magnitude + delta
    if m < 1:
        raise ValueError(f"underflow shifting {p} by {delta}")
    return Part(m, p.overlined)


def ge_with_gap(top: Part, bot: Part, gap: int) -> bool:
    """top >= bot + gap, with strict inequality if top is non-overlined.

    This is the difference condition (3) of the B and Bbar classes.
    """
    kt = (top.magnitude, top.overlined)
    kb = (bot.magnitude + gap, bot.overlined)
    return kt >= kb if top.overlined else kt > kb


def within_span(top: Part, bot: Part, span: int) -> bool:
    """top <= bot + span, with strict inequality if top is overlined.

    With span = eta this is the (k-1)-set condition; equivalently
    bot >= top - eta (strict if top overlined), the Gordon marking window.
    """
    kt = (top.magnitude, top.overlined)
    kb = (bot.magnitude + span, bot.overlined)
    return kt < kb if top.overlined else kt <= kb


def le_with_cap(bot: Part, x: Part, cap: int) -> bool:
    """x <= bot + cap, with strict inequality if bot is overlined.

    The reverse Gordon marking window: parts above bot within cap.
    """
    kx = (x.magnitude, x.overlined)
    kb = (bot.magnitude + cap, bot.overlined)
    return kx < kb if bot.overlined else kx <= kb


class BressoudParams(NamedTuple):
    eta: int
    alphas: tuple[int, ...]
    k: int
    r: int
    j: int

    @property
    def lam(self) -> int:
        return len(self.alphas)

    def validate(self) -> None:
        if self.eta < 1:
            raise ValueError("eta must be positive")
        if self.j not in (0, 1):
            raise ValueError("j must be 0 or 1")
        a = self.alphas
        if list(a) != sorted(set(a)):
            raise ValueError("alphas must be strictly increasing")
        if a and not (0 < a[0] and a[-1] < self.eta):
            raise ValueError("alphas must lie strictly between 0 and eta")
        for i in range(len(a)):
            if a[i] + a[len(a) - 1 - i] != self.eta:
                raise ValueError("alphas must satisfy alpha_i + alpha_{lam+1-i} = eta")
        if not (self.k >= self.r >= self.lam >= 0):
            raise ValueError("need k >= r >= lambda >= 0")

    def __str__(self) -> str:
        al = ":".join(map(str, self.alphas)) if self.alphas else "-"
        return f"({al};{self.eta},{self.k},{self.r})j={self.j}"


def parse_overpartition(text: str) -> Overpartition:
    """Parse "80o,80,70" style input: trailing 'o' marks an overline."""
    text = text.strip()
    if not text:
        return ()
    parts = []
    for tok in text.split(","):
        tok = tok.strip()
        over = tok.endswith("o")
        if over:
            tok = tok[:-1]
        parts.append(Part(int(tok), over))
    pi = tuple(parts)
    validate_overpartition(pi)
    return pi


def format_overpartition(pi: Overpartition) -> str:
    return ",".join(str(p) for p in pi)
