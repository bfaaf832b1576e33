"""Exact truncated Laurent series over the rationals, plus the Bailey-pair
toolkit used to verify the analytic identities.

Exponent convention: a series has an integer `unit`; the stored integer
exponent e represents q^(e/unit). Working on the half-lattice (unit=2) covers
products whose exponents are odd multiples of 1/2. `trunc` is the scaled
truncation bound: coefficients are exact for all exponents <= trunc. A series
with trunc=None is exact everywhere (a Laurent polynomial)."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator, Optional

from .core import BressoudParams


class QSeriesError(ValueError):
    pass


def _tmin(*ts):
    fin = [t for t in ts if t is not None]
    return min(fin) if fin else None


class QSeries:
    __slots__ = ("coeffs", "trunc", "unit")

    def __init__(self, coeffs: dict, trunc: Optional[int], unit: int = 1):
        if trunc is None:
            cc = {e: Fraction(c) for e, c in coeffs.items() if c}
        else:
            cc = {e: Fraction(c) for e, c in coeffs.items() if c and e <= trunc}
        self.coeffs = cc
        self.trunc = trunc
        self.unit = unit

    @property
    def floor(self) -> int:
        return min(self.coeffs, default=0)

    def coefficient(self, e: int) -> Fraction:
        return self.coeffs.get(e, Fraction(0))

    def _aligned(self, other: "QSeries"):
        u = self.unit * other.unit // gcd(self.unit, other.unit)
        a, b = u // self.unit, u // other.unit
        fa = {e * a: c for e, c in self.coeffs.items()}
        fb = {e * b: c for e, c in other.coeffs.items()}
        ta = None if self.trunc is None else self.trunc * a
        tb = None if other.trunc is None else other.trunc * b
        return fa, ta, fb, tb, u

    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = constant(other, unit=self.unit)
        fa, ta, fb, tb, u = self._aligned(other)
        t = _tmin(ta, tb)
        for e, c in fb.items():
            fa[e] = fa.get(e, Fraction(0)) + c
        return QSeries(fa, t, u)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            other = constant(other, unit=self.unit)
        return self + (other * Fraction(-1))

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            c = Fraction(other)
            return QSeries({e: v * c for e, v in self.coeffs.items()}, self.trunc, self.unit)
        fa, ta, fb, tb, u = self._aligned(other)
        floor_a = min(fa, default=0)
        floor_b = min(fb, default=0)
        t = _tmin(
            None if ta is None else ta + min(0, floor_b),
            None if tb is None else tb + min(0, floor_a),
        )
        out: dict[int, Fraction] = {}
        for e1, c1 in fa.items():
            for e2, c2 in fb.items():
                e = e1 + e2
                if t is not None and e > t:
                    continue
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return QSeries(out, t, u)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        fa, ta, fb, tb, _ = self._aligned(other)
        t = _tmin(ta, tb)
        exps = set(fa) | set(fb)
        for e in exps:
            if t is not None and e > t:
                continue
            if fa.get(e, Fraction(0)) != fb.get(e, Fraction(0)):
                return False
        return True

    def __hash__(self):
        return hash((self.unit, self.trunc, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        items = sorted(self.coeffs.items())[:8]
        body = " + ".join(f"{c}*q^{Fraction(e, self.unit)}" for e, c in items)
        more = "" if len(self.coeffs) <= 8 else " + ..."
        return f"QSeries({body or '0'}{more}; trunc={self.trunc}, unit={self.unit})"

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def to_json(self) -> str:
        return json.dumps(
            {
                "unit": self.unit,
                "floor": self.floor,
                "T": self.trunc,
                "coeffs": [[e, f"{c.numerator}/{c.denominator}"] for e, c in sorted(self.coeffs.items())],
            }
        )

    @staticmethod
    def from_json(text: str) -> "QSeries":
        d = json.loads(text)
        coeffs = {int(e): Fraction(s) for e, s in d["coeffs"]}
        return QSeries(coeffs, d["T"], d["unit"])


def constant(c, unit: int = 1) -> QSeries:
    return QSeries({0: Fraction(c)}, None, unit)


def monomial(c, e: int, unit: int = 1) -> QSeries:
    return QSeries({e: Fraction(c)}, None, unit)


def one(unit: int = 1) -> QSeries:
    return constant(1, unit)


def series_add(f: QSeries, g: QSeries) -> QSeries:
    return f + g


def series_sub(f: QSeries, g: QSeries) -> QSeries:
    return f - g


def series_mul(f: QSeries, g: QSeries) -> QSeries:
    return f * g


def series_inverse(f: QSeries, trunc: Optional[int] = None) -> QSeries:
    """Inverse of a Laurent series with invertible lowest term. The result is
    exact up to `trunc` (scaled), defaulting to f.trunc."""
    if not f.coeffs:
        raise QSeriesError("cannot invert the zero series")
    t = f.trunc if f.trunc is not None else trunc
    if t is None:
        raise QSeriesError("inverse of an exact polynomial needs an explicit trunc")
    e0 = f.floor
    h = {e - e0: c for e, c in f.coeffs.items()}
    c0 = h[0]
    depth = t + e0
    inv = {0: 1 / c0}
    hk = sorted(k for k in h if k > 0)
    for d in range(1, depth + 1):
        s = Fraction(0)
        for k in hk:
            if k > d:
                break
            prev = inv.get(d - k)
            if prev:
                s += h[k] * prev
        if s:
            inv[d] = -s / c0
    return QSeries({d - e0: c for d, c in inv.items()}, t, f.unit)


def pochhammer(
    sign: int,
    shift: int,
    base: int,
    count: Optional[int],
    trunc: Optional[int] = None,
    unit: int = 1,
) -> QSeries:
    """(sign*q^shift; q^base)_count with scaled exponents. count None means
    the infinite product (requires trunc); count -1 means the standard
    extension (a;q)_{-1} = 1/(1 - a/q)."""
    if count == -1:
        factor = one(unit) - monomial(sign, shift - base, unit)
        return series_inverse(factor, trunc if trunc is not None else 0)
    acc = one(unit)
    if count is None:
        if trunc is None:
            raise QSeriesError("infinite product needs trunc")
        if base <= 0 or shift <= 0:
            raise QSeriesError("infinite product needs positive exponents")
        acc = QSeries({0: Fraction(1)}, trunc, unit)
        i = 0
        while shift + i * base + acc.floor <= trunc:
            acc = acc * (one(unit) - monomial(sign, shift + i * base, unit))
            i += 1
        return acc
    if count < -1:
        raise QSeriesError("count below -1 unsupported")
    for i in range(count):
        acc = acc * (one(unit) - monomial(sign, shift + i * base, unit))
    if trunc is not None:
        acc = QSeries(acc.coeffs, trunc, unit)
    return acc


def inv_poch(sign, shift, base, count, trunc, unit: int = 1) -> QSeries:
    t = trunc if count is None else None
    return series_inverse(pochhammer(sign, shift, base, count, t, unit=unit), trunc)


def _product(factors, inv_specs, T: int, unit: int = 1) -> QSeries:
    """Multiply exact numerator factors, then the inverses of finite
    Pochhammers given as (sign, shift, base, count), building each inverse
    with enough slack that the result is exact to T."""
    num = one(unit)
    for f in factors:
        num = num * f
    slack = max(0, -num.floor)
    out = QSeries(num.coeffs, num.trunc if num.trunc is not None else T + slack, unit)
    for sign, shift, base, count in inv_specs:
        out = out * inv_poch(sign, shift, base, count, T + slack, unit)
    return out


@dataclass
class VerificationReport:
    check_id: str
    params: str
    status: str
    counterexample: Optional[dict] = None
    table: Optional[list] = None
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": self.params,
            "status": self.status,
            "counterexample": self.counterexample,
            "table": self.table,
            "wall_time": self.wall_time,
        }


def verify_identity(lhs: QSeries, rhs: QSeries, check_id: str = "identity", params: str = "") -> VerificationReport:
    start = time.monotonic()
    fa, ta, fb, tb, u = lhs._aligned(rhs)
    t = _tmin(ta, tb)
    for e in sorted(set(fa) | set(fb)):
        if t is not None and e > t:
            continue
        ca, cb = fa.get(e, Fraction(0)), fb.get(e, Fraction(0))
        if ca != cb:
            return VerificationReport(
                check_id,
                params,
                "fail",
                counterexample={"exponent": f"{Fraction(e, u)}", "lhs": str(ca), "rhs": str(cb)},
                wall_time=time.monotonic() - start,
            )
    return VerificationReport(check_id, params, "pass", wall_time=time.monotonic() - start)


# ---------------------------------------------------------------------------
# closed-form generating functions for the congruence-condition families

def gen_A_series(params: BressoudParams, j: int, T: int, family: str = "A") -> QSeries:
    """Generating function of the A (ordinary) or Abar (overpartition)
    congruence family, built magnitude by magnitude from the membership
    rules: an unbounded-multiplicity value contributes 1/(1-q^m), a
    distinct-occurrence value contributes (1+q^m)."""
    from . import classes

    res = {0} | {a % params.eta for a in params.alphas}
    acc = QSeries({0: Fraction(1)}, T, 1)
    if family == "A":
        repeatable, value_ok = classes._a_rules(params, j)
        for m in range(1, T + 1):
            if m % params.eta not in res or not value_ok(m):
                continue
            if repeatable(m):
                acc = acc * QSeries({m * t: Fraction(1) for t in range(T // m + 1)}, T, 1)
            else:
                acc = acc * (one() + monomial(1, m))
    elif family == "Abar":
        plain_ok, over_ok = classes._abar_rules(params, j)
        for m in range(1, T + 1):
            if m % params.eta not in res:
                continue
            if over_ok(m):
                acc = acc * (one() + monomial(1, m))
            if plain_ok(m):
                acc = acc * QSeries({m * t: Fraction(1) for t in range(T // m + 1)}, T, 1)
    else:
        raise QSeriesError(f"unknown family {family}")
    return acc


def counts_series(family: str, params: BressoudParams, j: int, T: int) -> QSeries:
    from .classes import counts_upto

    counts = counts_upto(family, params, j, T)
    return QSeries({n: Fraction(c) for n, c in enumerate(counts)}, T, 1)


# ---------------------------------------------------------------------------
# the (k-1)-fold sum side

def _descending_tuples(first: int, length: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for v in range(first, -1, -1):
        for rest in _descending_tuples(v, length - 1):
            yield (v,) + rest


def multisum_lhs(params: BressoudParams, T: int) -> QSeries:
    """The (k-1)-fold sum side of the overpartition generating-function
    theorem, as an exact series to T. Laurent intermediate terms come from
    the (1+q^{-eta N_r}) and shifted Pochhammer factors; each summand is
    assembled with enough slack that the total is exact to T."""
    eta, k, r, lam = params.eta, params.k, params.r, params.lam
    alphas = params.alphas
    if not (k >= r > lam >= 0):
        raise QSeriesError("requires k >= r > lambda >= 0")
    total = QSeries({}, T, 1)
    empty_levels = 0
    n1 = 0
    while empty_levels < 2:
        level_any = False
        for Ns in _descending_tuples(n1, k - 2):
            N = (n1,) + Ns  # N[i-1] is N_i
            def Nv(i: int) -> int:
                return N[i - 1] if 1 <= i <= k - 1 else 0

            expo = eta * (sum(x * x for x in N) + sum(Nv(i) for i in range(r, k)))
            factors = [
                monomial(1, expo),
                one() + monomial(1, -eta * Nv(r)),
            ]
            nl1 = Nv(lam + 1)
            if nl1 == 0:
                factors.append(constant(Fraction(1, 2)))
            else:
                factors.append(pochhammer(-1, eta - eta * nl1, eta, nl1 - 1))
            for s in range(1, lam + 1):
                factors.append(pochhammer(-1, eta - alphas[s - 1] - eta * Nv(s), eta, Nv(s)))
            inv_specs = [(1, eta, eta, Nv(i) - Nv(i + 1)) for i in range(1, k - 1)]
            inv_specs.append((1, 2 * eta, 2 * eta, Nv(k - 1)))
            term = _product(factors, inv_specs, T)
            if lam >= 1:
                term = term * pochhammer(-1, eta + eta * Nv(lam), eta, None, term.trunc)
            for s in range(2, lam + 1):
                term = term * pochhammer(-1, eta - alphas[s - 1] + eta * Nv(s - 1), eta, None, term.trunc)
            if term.coeffs and term.floor <= T:
                total = total + term
                level_any = True
        empty_levels = 0 if level_any else empty_levels + 1
        n1 += 1
    return total


def gbo1_rhs(params: BressoudParams, T: int) -> QSeries:
    """Product side matching multisum_lhs."""
    eta, k, r, lam = params.eta, params.k, params.r, params.lam
    if (lam * eta) % 2:
        raise QSeriesError("lambda*eta must be even for integral exponents")
    m = eta * (2 * k - lam - 1)
    a = eta * (2 * r - lam) // 2
    acc = QSeries({0: Fraction(1)}, T, 1)
    for al in params.alphas:
        acc = acc * pochhammer(-1, al, eta, None, T)
    acc = acc * pochhammer(-1, eta, eta, None, T)
    acc = acc * pochhammer(1, a, m, None, T)
    acc = acc * pochhammer(1, m - a, m, None, T)
    acc = acc * pochhammer(1, m, m, None, T)
    acc = acc * inv_poch(1, eta, eta, None, T)
    return acc


# ---------------------------------------------------------------------------
# classical multisum identities

def classical_identity_check(name: str, k: int, r: int, j: int, T: int) -> VerificationReport:
    """name: andrews-gordon | bressoud-even | gollnitz-gordon."""
    start = time.monotonic()
    total = QSeries({}, T, 1)
    empty_levels = 0
    n1 = 0
    while empty_levels < 2:
        level_any = False
        for Ns in _descending_tuples(n1, k - 2):
            N = (n1,) + Ns
            quad = sum(x * x for x in N) + sum(N[i - 1] for i in range(r, k))
            if name in ("andrews-gordon", "bressoud-even"):
                factors = [monomial(1, quad)]
                inv_specs = [(1, 1, 1, N[i] - N[i + 1]) for i in range(k - 2)]
                if name == "andrews-gordon":
                    inv_specs.append((1, 1, 1, N[-1]))
                else:
                    inv_specs.append((1, 2, 2, N[-1]))
            elif name == "gollnitz-gordon":
                factors = [
                    monomial(1, 2 * quad),
                    pochhammer(-1, 1 - 2 * n1, 2, n1),
                ]
                inv_specs = [(1, 2, 2, N[i] - N[i + 1]) for i in range(k - 2)]
                inv_specs.append((1, 4 - 2 * j, 4 - 2 * j, N[-1]))
            else:
                raise QSeriesError(f"unknown identity {name}")
            term = _product(factors, inv_specs, T)
            if term.coeffs and term.floor <= T:
                total = total + term
                level_any = True
        empty_levels = 0 if level_any else empty_levels + 1
        n1 += 1

    if name == "andrews-gordon":
        m = 2 * k + 1
        rhs = (
            pochhammer(1, r, m, None, T)
            * pochhammer(1, m - r, m, None, T)
            * pochhammer(1, m, m, None, T)
            * inv_poch(1, 1, 1, None, T)
        )
    elif name == "bressoud-even":
        m = 2 * k
        rhs = (
            pochhammer(1, r, m, None, T)
            * pochhammer(1, m - r, m, None, T)
            * pochhammer(1, m, m, None, T)
            * inv_poch(1, 1, 1, None, T)
        )
    else:
        m = 4 * k - 2 + 2 * j
        rhs = (
            pochhammer(1, 2, 4, None, T)
            * pochhammer(1, 2 * r - 1, m, None, T)
            * pochhammer(1, m - (2 * r - 1), m, None, T)
            * pochhammer(1, m, m, None, T)
            * inv_poch(1, 1, 1, None, T)
        )
    rep = verify_identity(total, rhs, check_id=name, params=f"k={k},r={r},j={j},T={T}")
    rep.wall_time = time.monotonic() - start
    return rep


# ---------------------------------------------------------------------------
# Bailey machinery (relative to (1, q), plain q lattice)

@dataclass
class BaileyPairSeq:
    alpha: Callable[[int], QSeries]
    beta: Callable[[int], QSeries]
    trunc: int
    label: str = ""


def _memo(fn):
    cache: dict[int, QSeries] = {}

    def wrapped(n: int) -> QSeries:
        if n not in cache:
            cache[n] = fn(n)
        return cache[n]

    return wrapped


def bp1_pair(T: int) -> BaileyPairSeq:
    """Slater's pair: alpha_n = (-1)^n (q^-n + q^n), beta_n = (-1)^n q^-n / (q^2;q^2)_n."""

    def alpha(n: int) -> QSeries:
        if n == 0:
            return one()
        s = Fraction(-1) ** n
        return monomial(s, -n) + monomial(s, n)

    def beta(n: int) -> QSeries:
        return monomial(Fraction(-1) ** n, -n) * inv_poch(1, 2, 2, n, T + n)

    return BaileyPairSeq(_memo(alpha), _memo(beta), T, "bp1")


def _alpha_shape(A: int, n: int) -> QSeries:
    if n == 0:
        return one()
    s = Fraction(-1) ** n
    return monomial(s, A * n * n + (A - 1) * n) + monomial(s, A * n * n - (A - 1) * n)


def bl1_transform(pair: BaileyPairSeq) -> BaileyPairSeq:
    def alpha(n: int) -> QSeries:
        return monomial(1, n * n) * pair.alpha(n)

    def beta(n: int) -> QSeries:
        total = QSeries({}, pair.trunc, 1)
        for jj in range(n + 1):
            total = total + monomial(1, jj * jj) * pair.beta(jj) * inv_poch(1, 1, 1, n - jj, pair.trunc)
        return total

    return BaileyPairSeq(_memo(alpha), _memo(beta), pair.trunc, pair.label + ">bl1")


def _check_shape(pair: BaileyPairSeq, A: int) -> None:
    for n in range(4):
        if not (pair.alpha(n) == _alpha_shape(A, n)):
            raise QSeriesError(f"alpha does not have the A={A} closed shape at n={n}")


def blbp_transform(A: int) -> Callable[[BaileyPairSeq], BaileyPairSeq]:
    def apply(pair: BaileyPairSeq) -> BaileyPairSeq:
        _check_shape(pair, A)

        def alpha(n: int) -> QSeries:
            if n == 0:
                return one()
            s = Fraction(-1) ** n
            return monomial(s, A * n * n + A * n) + monomial(s, A * n * n - A * n)

        def beta(n: int) -> QSeries:
            return monomial(1, n) * pair.beta(n)

        return BaileyPairSeq(_memo(alpha), _memo(beta), pair.trunc, pair.label + f">blbp({A})")

    return apply


def cbl4_transform(A: int) -> Callable[[BaileyPairSeq], BaileyPairSeq]:
    def apply(pair: BaileyPairSeq) -> BaileyPairSeq:
        _check_shape(pair, A)
        half = Fraction(1, 2)

        def alpha(n: int) -> QSeries:
            if n == 0:
                return one()
            s = Fraction(-1) ** n
            core = monomial(s, A * n * n + (A - 1) * n) + monomial(s, A * n * n - A * n)
            return core * (one() + monomial(1, n)) * half

        def beta(n: int) -> QSeries:
            return pair.beta(n) * (one() + monomial(1, n)) * half

        return BaileyPairSeq(_memo(alpha), _memo(beta), pair.trunc, pair.label + f">cbl4({A})")

    return apply


def chain_pair(k: int, r: int, T: int) -> BaileyPairSeq:
    """The iterated-transform pair with alpha of shape A=k-r (the 2(k-r)-th
    entry of the chain grown from Slater's pair)."""
    p = bl1_transform(blbp_transform(0)(bp1_pair(T)))
    for A in range(1, k - r):
        p = bl1_transform(blbp_transform(A)(p))
    return p


def _beta_multisum(k: int, r: int, n: int, T: int) -> QSeries:
    total = QSeries({}, T, 1)
    fold = k - 1 - r
    for Ns in _descending_tuples(n, fold):
        chain = (n,) + Ns
        quad = sum(x * x + x for x in Ns)
        inv_specs = [(1, 1, 1, chain[i] - chain[i + 1]) for i in range(fold)]
        inv_specs.append((1, 2, 2, chain[-1]))
        total = total + _product([monomial(1, quad)], inv_specs, T)
    return total


def pair_2k2r1(k: int, r: int, T: int) -> BaileyPairSeq:
    """Direct construction of the chain endpoint before symmetrization."""

    def alpha(n: int) -> QSeries:
        return _alpha_shape(k - r, n)

    def beta(n: int) -> QSeries:
        return _beta_multisum(k, r, n, T)

    return BaileyPairSeq(_memo(alpha), _memo(beta), T, f"2k2r1({k},{r})")


def bpg_pair(k: int, r: int, T: int, method: str = "direct") -> BaileyPairSeq:
    if method == "chain":
        return cbl4_transform(k - r)(chain_pair(k, r, T))
    half = Fraction(1, 2)
    A = k - r

    def alpha(n: int) -> QSeries:
        if n == 0:
            return one()
        s = Fraction(-1) ** n
        core = monomial(s, A * n * n + (A - 1) * n) + monomial(s, A * n * n - A * n)
        return core * (one() + monomial(1, n)) * half

    def beta(n: int) -> QSeries:
        return _beta_multisum(k, r, n, T) * (one() + monomial(1, n)) * half

    return BaileyPairSeq(_memo(alpha), _memo(beta), T, f"bpg({k},{r})")


def bailey_pair_check(pair: BaileyPairSeq, n_max: int, T: int) -> VerificationReport:
    """Verify beta_n = sum_{j<=n} alpha_j / ((q;q)_{n-j} (q;q)_{n+j})."""
    start = time.monotonic()
    for n in range(n_max + 1):
        rhs = QSeries({}, T, 1)
        for jj in range(n + 1):
            rhs = rhs + _product(
                [pair.alpha(jj)],
                [(1, 1, 1, n - jj), (1, 1, 1, n + jj)],
                T,
            )
        lhs = pair.beta(n)
        rep = verify_identity(lhs, rhs, check_id="bailey", params=f"{pair.label} n={n}")
        if not rep.passed:
            rep.counterexample["n"] = n
            rep.wall_time = time.monotonic() - start
            return rep
    return VerificationReport("bailey", f"{pair.label} n<=={n_max}", "pass", wall_time=time.monotonic() - start)


# ---------------------------------------------------------------------------
# the limiting Bailey-lattice corollary, on the half lattice (unit=2)

def _reinterpret(f: QSeries, mult: int, unit: int, trunc: int) -> QSeries:
    src_t = f.trunc
    if src_t is not None and src_t * mult < trunc:
        raise QSeriesError("source series too short for requested trunc")
    return QSeries({e * mult: c for e, c in f.coeffs.items()}, trunc, unit)


def corollary_lc_check(params: BressoudParams, T: int) -> VerificationReport:
    """Both sides of the limiting multisum corollary with the symmetrized
    pair substituted at q -> q^eta, verified on the half lattice."""
    start = time.monotonic()
    eta, k, r, lam = params.eta, params.k, params.r, params.lam
    alphas = params.alphas
    if not r > lam >= 0:
        raise QSeriesError("requires r > lambda >= 0")
    T2 = 2 * T  # scaled bound, unit=2
    pair = bpg_pair(k, r, T // eta + 4 * k + 8)
    sub = lambda f: _reinterpret(f, 2 * eta, 2, T2)

    lhs = QSeries({}, T2, 2)
    n = 0
    while True:
        # scaled exponent of the leading monomial
        e = (2 * r - lam - 1) * eta * n * n + (lam + 1) * eta * n - 2 * sum(alphas) * n
        alpha_n = sub(pair.alpha(n))
        if n > 0 and e + min(0, alpha_n.floor) > T2 + 2 * eta * n:
            break
        factors = [monomial(Fraction(2), e, 2), alpha_n]
        for a in alphas:
            factors.append(pochhammer(-1, 2 * a, 2 * eta, n, unit=2))
        num = one(2)
        for f in factors:
            num = num * f
        slack = max(0, -num.floor)
        term = QSeries(num.coeffs, T2 + slack, 2)
        term = term * series_inverse(one(2) + monomial(1, 2 * eta * n, 2), T2 + slack)
        for a in alphas:
            term = term * inv_poch(-1, 2 * (eta - a), 2 * eta, n, T2 + slack, unit=2)
        if term.coeffs and term.floor <= T2:
            lhs = lhs + term
        elif n > 0:
            break
        n += 1

    a1 = alphas[0] if lam >= 1 else 0
    prefactor = pochhammer(1, 2 * eta, 2 * eta, None, T2, 2) * series_inverse(
        pochhammer(-1, 2 * (eta - a1), 2 * eta, None, T2, 2), T2
    )
    rhs_sum = QSeries({}, T2, 2)
    empty_levels = 0
    n1 = 0
    while empty_levels < 2:
        level_any = False
        for Ns in _descending_tuples(n1, r - 1):
            N = (n1,) + Ns

            def Nv(i: int) -> int:
                return N[i - 1] if 1 <= i <= r else 0

            e = 2 * eta * sum(Nv(i) * Nv(i) for i in range(lam + 2, r + 1))
            e += eta * sum(Nv(i) * (Nv(i) + 1) for i in range(1, lam + 2))
            e -= 2 * sum(alphas[i - 1] * Nv(i) for i in range(1, lam + 1))
            factors = [monomial(1, e, 2), pochhammer(-1, 0, 2 * eta, Nv(lam + 1), unit=2)]
            for s in range(1, lam + 1):
                factors.append(pochhammer(-1, 2 * alphas[s - 1], 2 * eta, Nv(s), unit=2))
            factors.append(sub(pair.beta(Nv(r))))
            num = one(2)
            for f in factors:
                num = num * f
            slack = max(0, -num.floor)
            term = QSeries(num.coeffs, _tmin(num.trunc, T2 + slack), 2)
            for i in range(1, r):
                term = term * inv_poch(1, 2 * eta, 2 * eta, Nv(i) - Nv(i + 1), T2 + slack, unit=2)
            if lam >= 1:
                term = term * inv_poch(-1, 2 * eta, 2 * eta, Nv(lam), T2 + slack, unit=2)
            for s in range(2, lam + 1):
                term = term * inv_poch(-1, 2 * (eta - alphas[s - 1]), 2 * eta, Nv(s - 1), T2 + slack, unit=2)
            if term.coeffs and term.floor <= T2:
                rhs_sum = rhs_sum + term
                level_any = True
        empty_levels = 0 if level_any else empty_levels + 1
        n1 += 1
    rhs = prefactor * rhs_sum
    rep = verify_identity(lhs, rhs, check_id="corollary-lc", params=f"{params} T={T}")
    rep.wall_time = time.monotonic() - start
    return rep
