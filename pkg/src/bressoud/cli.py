"""Command line surface: count tables, verification runs, bijection traces.

Exit codes: 0 pass, 1 verification failure, 2 usage or config error."""

from __future__ import annotations

import csv
import io
import json
import sys
import time
from collections import Counter
from dataclasses import dataclass, field

import click

from . import classes, qseries
from .bijections import PhiTrace, chi_r_eq_k, phi, phi0, psi, psi0
from .classes import count_family, is_Bbar, members_upto, weight_of
from .core import (
    BressoudParams,
    format_overpartition,
    parse_overpartition,
    weight,
)
from .marking import gordon_marking, reverse_gordon_marking
from .qseries import (
    VerificationReport,
    bailey_pair_check,
    bl1_transform,
    blbp_transform,
    bp1_pair,
    bpg_pair,
    chain_pair,
    classical_identity_check,
    corollary_lc_check,
    counts_series,
    gbo1_rhs,
    gen_A_series,
    inv_poch,
    multisum_lhs,
    pair_2k2r1,
    pochhammer,
    verify_identity,
)

CHECK_IDS = (
    "phi-roundtrip",
    "phi0-roundtrip",
    "rel-over1",
    "rel-over2",
    "abar-equals-bbar",
    "gf-thm",
    "bailey",
    "sum-side",
    "classic-ids",
)


@dataclass
class RunConfig:
    params: list = field(default_factory=list)
    max_weight: int = 30
    trunc: int = 40
    checks: list = field(default_factory=list)
    out: str | None = None
    trace: bool = False


class UsageError(ValueError):
    pass


def parse_params(text: str) -> BressoudParams:
    """eta=10,alphas=3:7,k=4,r=3,j=0 (alphas may be empty or omitted)."""
    fields = {"eta": None, "alphas": (), "k": None, "r": None, "j": 0}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise UsageError(f"bad params fragment {chunk!r}")
        key, _, val = chunk.partition("=")
        key = key.strip()
        if key == "alphas":
            fields["alphas"] = tuple(int(x) for x in val.split(":") if x)
        elif key in fields:
            fields[key] = int(val)
        else:
            raise UsageError(f"unknown params key {key!r}")
    for need in ("eta", "k", "r"):
        if fields[need] is None:
            raise UsageError(f"params missing {need}")
    p = BressoudParams(fields["eta"], fields["alphas"], fields["k"], fields["r"], fields["j"])
    p.validate()
    return p


def load_config(path: str | None, params: str | None, max_weight, trunc, out, trace) -> RunConfig:
    cfg = RunConfig()
    if path:
        with open(path) as fh:
            raw = json.load(fh)
        for entry in raw.get("params", []):
            p = BressoudParams(
                entry["eta"],
                tuple(entry.get("alphas", ())),
                entry["k"],
                entry["r"],
                entry.get("j", 0),
            )
            p.validate()
            cfg.params.append(p)
        cfg.max_weight = raw.get("max_weight", cfg.max_weight)
        cfg.trunc = raw.get("trunc", cfg.trunc)
        cfg.checks = raw.get("checks", [])
        cfg.out = raw.get("out")
        cfg.trace = raw.get("trace", False)
    if params:
        cfg.params = [parse_params(params)]
    if max_weight is not None:
        cfg.max_weight = max_weight
    if trunc is not None:
        cfg.trunc = trunc
    if out is not None:
        cfg.out = out
    if trace:
        cfg.trace = True
    return cfg


# ---------------------------------------------------------------------------
# verification checks

def _b1_shifted(params: BressoudParams) -> BressoudParams:
    return BressoudParams(
        params.eta, params.alphas, params.k - 1, params.r - chi_r_eq_k(params), 1
    )


def check_phi_roundtrip(params: BressoudParams, W: int) -> VerificationReport:
    start = time.monotonic()
    zetas = members_upto("D_eta", params, 0, W)
    mus = members_upto("B", params, 0, W)
    got: Counter = Counter()
    for z in zetas:
        wz = sum(z)
        for mu in mus:
            w = wz + weight(mu)
            if w > W:
                continue
            image = phi(z, mu, params)
            ok = weight(image) == w and is_Bbar(image, params, 1)
            if ok:
                back = psi(image, params)
                ok = back == (z, mu)
            if not ok:
                return VerificationReport(
                    "phi-roundtrip",
                    str(params),
                    "fail",
                    counterexample={
                        "zeta": list(z),
                        "mu": format_overpartition(mu),
                        "image": format_overpartition(image),
                    },
                    wall_time=time.monotonic() - start,
                )
            got[w] += 1
    want = classes.counts_upto("Bbar", params, 1, W)
    for n in range(W + 1):
        if got.get(n, 0) != want[n]:
            return VerificationReport(
                "phi-roundtrip",
                str(params),
                "fail",
                counterexample={"weight": n, "mapped": got.get(n, 0), "class_count": want[n]},
                wall_time=time.monotonic() - start,
            )
    return VerificationReport(
        "phi-roundtrip",
        str(params),
        "pass",
        table=[[n, want[n]] for n in range(W + 1)],
        wall_time=time.monotonic() - start,
    )


def check_phi0_roundtrip(params: BressoudParams, W: int) -> VerificationReport:
    start = time.monotonic()
    inner = _b1_shifted(params)
    zetas = members_upto("D_eta", params, 0, W)
    mus = members_upto("B", inner, 1, W)
    got: Counter = Counter()
    for z in zetas:
        wz = sum(z)
        for mu in mus:
            w = wz + weight(mu)
            if w > W:
                continue
            image = phi0(z, mu, params)
            ok = weight(image) == w and is_Bbar(image, params, 0)
            if ok:
                back = psi0(image, params)
                ok = back == (z, mu)
            if not ok:
                return VerificationReport(
                    "phi0-roundtrip",
                    str(params),
                    "fail",
                    counterexample={
                        "zeta": list(z),
                        "mu": format_overpartition(mu),
                        "image": format_overpartition(image),
                    },
                    wall_time=time.monotonic() - start,
                )
            got[w] += 1
    want = classes.counts_upto("Bbar", params, 0, W)
    for n in range(W + 1):
        if got.get(n, 0) != want[n]:
            return VerificationReport(
                "phi0-roundtrip",
                str(params),
                "fail",
                counterexample={"weight": n, "mapped": got.get(n, 0), "class_count": want[n]},
                wall_time=time.monotonic() - start,
            )
    return VerificationReport(
        "phi0-roundtrip",
        str(params),
        "pass",
        table=[[n, want[n]] for n in range(W + 1)],
        wall_time=time.monotonic() - start,
    )


def check_rel_over1(params: BressoudParams, W: int) -> VerificationReport:
    lhs = counts_series("Bbar", params, 1, W)
    rhs = pochhammer(-1, params.eta, params.eta, None, W) * counts_series("B", params, 0, W)
    return verify_identity(lhs, rhs, "rel-over1", str(params))


def check_rel_over2(params: BressoudParams, W: int) -> VerificationReport:
    lhs = counts_series("Bbar", params, 0, W)
    rhs = pochhammer(-1, params.eta, params.eta, None, W) * counts_series("B", _b1_shifted(params), 1, W)
    return verify_identity(lhs, rhs, "rel-over2", str(params))


def check_abar_equals_bbar(params: BressoudParams, W: int) -> VerificationReport:
    lhs = counts_series("Abar", params, 0, W)
    rhs = counts_series("Bbar", params, 0, W)
    return verify_identity(lhs, rhs, "abar-equals-bbar", str(params))


def check_gf_thm(params: BressoudParams, T: int) -> VerificationReport:
    return verify_identity(
        multisum_lhs(params, T), gbo1_rhs(params, T), "gf-thm", f"{params} T={T}"
    )


def check_sum_side(params: BressoudParams, T: int) -> VerificationReport:
    lhs = multisum_lhs(params, T)
    rhs = counts_series("Bbar", params, 0, T)
    return verify_identity(lhs, rhs, "sum-side", f"{params} T={T}")


def check_bailey(T: int = 60, n_max: int = 8) -> list[VerificationReport]:
    reports = [bailey_pair_check(bp1_pair(T + 2 * n_max), n_max, T)]
    unit2 = bl1_transform(blbp_transform(0)(bp1_pair(T + 2 * n_max)))
    reports.append(bailey_pair_check(unit2, n_max, T))
    for k, r in ((2, 1), (3, 1), (3, 2)):
        chain = chain_pair(k, r, T + 2 * n_max)
        direct = pair_2k2r1(k, r, T + 2 * n_max)
        for n in range(n_max + 1):
            rep = verify_identity(chain.beta(n), direct.beta(n), "bailey", f"chain beta k={k} r={r} n={n}")
            if not rep.passed:
                return reports + [rep]
            rep = verify_identity(chain.alpha(n), direct.alpha(n), "bailey", f"chain alpha k={k} r={r} n={n}")
            if not rep.passed:
                return reports + [rep]
        sym_chain = bpg_pair(k, r, T + 2 * n_max, method="chain")
        sym = bpg_pair(k, r, T + 2 * n_max)
        for n in range(n_max + 1):
            rep = verify_identity(sym_chain.beta(n), sym.beta(n), "bailey", f"sym beta k={k} r={r} n={n}")
            if not rep.passed:
                return reports + [rep]
        reports.append(
            VerificationReport("bailey", f"chain-vs-direct k={k} r={r}", "pass")
        )
        reports.append(bailey_pair_check(sym, min(n_max, 6), T))
    return reports


def check_classic_ids(T: int = 100) -> list[VerificationReport]:
    reports = []
    for k, r in ((2, 1), (2, 2), (3, 2)):
        reports.append(classical_identity_check("andrews-gordon", k, r, 1, T))
    reports.append(classical_identity_check("bressoud-even", 3, 2, 0, T))
    for j in (0, 1):
        reports.append(classical_identity_check("gollnitz-gordon", 2, 2, j, T))
    return reports


def run_check(check_id: str, cfg: RunConfig) -> list[VerificationReport]:
    if check_id == "bailey":
        return check_bailey(cfg.trunc)
    if check_id == "classic-ids":
        return check_classic_ids(cfg.trunc)
    if not cfg.params:
        raise UsageError(f"check {check_id} needs --params or a config file")
    out = []
    for p in cfg.params:
        if check_id == "phi-roundtrip":
            out.append(check_phi_roundtrip(p, cfg.max_weight))
        elif check_id == "phi0-roundtrip":
            out.append(check_phi0_roundtrip(p, cfg.max_weight))
        elif check_id == "rel-over1":
            out.append(check_rel_over1(p, cfg.max_weight))
        elif check_id == "rel-over2":
            out.append(check_rel_over2(p, cfg.max_weight))
        elif check_id == "abar-equals-bbar":
            out.append(check_abar_equals_bbar(p, cfg.max_weight))
        elif check_id == "gf-thm":
            out.append(check_gf_thm(p, cfg.trunc))
        elif check_id == "sum-side":
            out.append(check_sum_side(p, cfg.trunc))
        else:
            raise UsageError(f"unknown check {check_id!r}")
    return out


# ---------------------------------------------------------------------------
# command implementations (thin wrappers around library calls)

def cmd_count(family: str, params: BressoudParams, n_range) -> list[list[int]]:
    counts = classes.counts_upto(family, params, 1 if family == "B" else 0, max(n_range, default=0))
    return [[n, counts[n]] for n in n_range]


def cmd_verify(check_id: str, cfg: RunConfig):
    reports = run_check(check_id, cfg)
    code = 0 if all(r.passed for r in reports) else 1
    return code, reports


def cmd_trace(bijection: str, zeta, mu, params: BressoudParams) -> PhiTrace:
    trace = PhiTrace()
    if bijection == "phi":
        phi(zeta, mu, params, trace=trace)
    elif bijection == "phi0":
        phi0(zeta, mu, params, trace=trace)
    elif bijection == "psi":
        psi(mu, params, trace=trace)
    elif bijection == "psi0":
        psi0(mu, params, trace=trace)
    else:
        raise UsageError(f"unknown bijection {bijection!r}")
    return trace


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


# ---------------------------------------------------------------------------
# click wiring

@click.group()
def main():
    """Overpartition class counting and identity verification."""


_shared = [
    click.option("--config", "config_path", type=click.Path(exists=True), default=None),
    click.option("--params", "params_text", default=None),
    click.option("--max-weight", type=int, default=None),
    click.option("--trunc", type=int, default=None),
    click.option("--out", default=None),
    click.option("--trace", "trace_flag", is_flag=True, default=False),
]


def shared_options(fn):
    for opt in reversed(_shared):
        fn = opt(fn)
    return fn


@main.command("count")
@click.argument("family", type=click.Choice(classes.FAMILIES))
@click.option("--j", type=int, default=None, help="parity index; defaults per family")
@click.option("--fmt", type=click.Choice(["csv", "json"]), default="csv")
@shared_options
def count_cmd(family, j, fmt, config_path, params_text, max_weight, trunc, out, trace_flag):
    try:
        cfg = load_config(config_path, params_text, max_weight, trunc, out, trace_flag)
        if not cfg.params:
            raise UsageError("count needs --params or a config file")
        params = cfg.params[0]
        jj = j if j is not None else (1 if family == "B" else 0)
        counts = classes.counts_upto(family, params, jj, cfg.max_weight)
    except (UsageError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    rows = [[n, counts[n]] for n in range(cfg.max_weight + 1)]
    if fmt == "json":
        _emit(json.dumps({"family": family, "params": str(params), "counts": rows}) + "\n", cfg.out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "count"])
        writer.writerows(rows)
        _emit(buf.getvalue(), cfg.out)
    sys.exit(0)


@main.command("verify")
@click.argument("check_id")
@shared_options
def verify_cmd(check_id, config_path, params_text, max_weight, trunc, out, trace_flag):
    try:
        if check_id not in CHECK_IDS:
            raise UsageError(f"unknown check {check_id!r}; choose from {', '.join(CHECK_IDS)}")
        cfg = load_config(config_path, params_text, max_weight, trunc, out, trace_flag)
        code, reports = cmd_verify(check_id, cfg)
    except (UsageError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    payload = json.dumps({"check": check_id, "reports": [r.to_dict() for r in reports]}, indent=2)
    _emit(payload + "\n", cfg.out)
    sys.exit(code)


@main.command("trace")
@click.argument("bijection", type=click.Choice(["phi", "phi0", "psi", "psi0"]))
@click.option("--zeta", "zeta_text", default="")
@click.option("--mu", "mu_text", default="")
@shared_options
def trace_cmd(bijection, zeta_text, mu_text, config_path, params_text, max_weight, trunc, out, trace_flag):
    try:
        cfg = load_config(config_path, params_text, max_weight, trunc, out, trace_flag)
        if not cfg.params:
            raise UsageError("trace needs --params or a config file")
        params = cfg.params[0]
        zeta = tuple(int(x) for x in zeta_text.split(",") if x.strip())
        mu = parse_overpartition(mu_text) if mu_text else ()
        trace = cmd_trace(bijection, zeta, mu, params)
    except (UsageError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    lines = []
    for op, snapshot in trace:
        marks = gordon_marking(snapshot, params.eta).marks if snapshot else ()
        rmarks = reverse_gordon_marking(snapshot, params.eta).marks if snapshot else ()
        lines.append(f"{op}: {format_overpartition(snapshot) or '(empty)'}")
        if snapshot:
            lines.append(f"  marks={','.join(map(str, marks))} reverse={','.join(map(str, rmarks))}")
    _emit("\n".join(lines) + "\n", cfg.out)
    sys.exit(0)


if __name__ == "__main__":
    main()
