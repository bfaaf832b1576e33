"""Command line surface: count tables, verify reports, trace dumps."""

import json

import pytest
from click.testing import CliRunner

from bressoud.cli import main, parse_params
from bressoud.core import BressoudParams


@pytest.fixture
def runner():
    return CliRunner()


def test_parse_params():
    assert parse_params("eta=10,alphas=3:7,k=4,r=3,j=0") == BressoudParams(10, (3, 7), 4, 3, 0)
    assert parse_params("eta=1,alphas=,k=3,r=2,j=1") == BressoudParams(1, (), 3, 2, 1)
    with pytest.raises(ValueError):
        parse_params("eta=10,k=4")


def test_count_d_eta_oracle(runner):
    res = runner.invoke(main, ["count", "D_eta", "--params", "eta=1,alphas=,k=3,r=2,j=0", "--max-weight", "9"])
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines[0] == "n,count"
    assert [int(l.split(",")[1]) for l in lines[1:]] == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8]


def test_count_bbar_matches_library(runner):
    from bressoud.classes import counts_upto

    res = runner.invoke(main, ["count", "Bbar", "--params", "eta=1,alphas=,k=3,r=2,j=0", "--max-weight", "10"])
    assert res.exit_code == 0
    got = [int(l.split(",")[1]) for l in res.output.strip().splitlines()[1:]]
    assert got == list(counts_upto("Bbar", BressoudParams(1, (), 3, 2, 0), 0, 10))


def test_count_json_format(runner):
    res = runner.invoke(main, ["count", "Bbar", "--params", "eta=1,alphas=,k=3,r=2,j=0", "--max-weight", "4", "--fmt", "json"])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["counts"] == [[0, 1], [1, 2], [2, 3], [3, 5], [4, 8]]


def test_count_requires_params(runner):
    res = runner.invoke(main, ["count", "Bbar"])
    assert res.exit_code == 2


def test_verify_pass_exit_zero(runner):
    res = runner.invoke(main, ["verify", "gf-thm", "--params", "eta=1,alphas=,k=3,r=2,j=0", "--trunc", "40"])
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["reports"][0]["status"] == "pass"


def test_verify_unknown_check_exit_two(runner):
    res = runner.invoke(main, ["verify", "nonsense"])
    assert res.exit_code == 2


def test_verify_bad_params_exit_two(runner):
    res = runner.invoke(main, ["verify", "gf-thm", "--params", "eta=1,alphas=,k=2,r=5,j=0"])
    assert res.exit_code == 2


def test_config_file_with_cli_override(runner, tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"params": [{"eta": 1, "alphas": [], "k": 3, "r": 2, "j": 0}], "trunc": 10}))
    res = runner.invoke(main, ["verify", "gf-thm", "--config", str(cfg), "--trunc", "30"])
    assert res.exit_code == 0
    assert "T=30" in json.loads(res.output)["reports"][0]["params"]


def test_verify_report_written_to_file(runner, tmp_path):
    out = tmp_path / "report.json"
    res = runner.invoke(main, ["verify", "gf-thm", "--params", "eta=1,alphas=,k=3,r=2,j=0", "--trunc", "20", "--out", str(out)])
    assert res.exit_code == 0
    assert json.loads(out.read_text())["check"] == "gf-thm"


def test_trace_walkthrough_stages(runner):
    res = runner.invoke(main, [
        "trace", "phi0",
        "--params", "eta=10,alphas=3:7,k=4,r=3,j=0",
        "--zeta", "50,30,20,10",
        "--mu", "23o,20,7o,3o",
    ])
    assert res.exit_code == 0
    assert res.output.count("combine") == 4
    assert "50o,30o,23o,20,20,10o,7o,3o" in res.output


def test_trace_empty_zeta_single_stage(runner):
    res = runner.invoke(main, [
        "trace", "phi", "--params", "eta=1,alphas=,k=3,r=2,j=1", "--mu", "5,3",
    ])
    assert res.exit_code == 0
    assert res.output.startswith("start:")


def test_trace_bad_input_exit_two(runner):
    res = runner.invoke(main, [
        "trace", "phi", "--params", "eta=10,alphas=3:7,k=4,r=3,j=1",
        "--zeta", "15", "--mu", "3o",
    ])
    assert res.exit_code == 2
