import json

import pytest

from picardperiods.cli import main
from picardperiods.reports import dumps, sanitize


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify_presentations(capsys):
    code, out = run(capsys, "verify", "presentations")
    assert code == 0
    rep = json.loads(out)
    assert rep["pass"] is True


def test_verify_theorem2(capsys):
    code, out = run(capsys, "verify", "theorem2", "--k", "2")
    assert code == 0
    rep = json.loads(out)
    blocks = rep["theorem2"]
    assert len(blocks) == 7  # six displays plus the derived six-term relation


def test_verify_paths(capsys):
    code, out = run(capsys, "verify", "paths")
    assert code == 0


def test_eval_period_matrix(capsys):
    code, out = run(capsys, "eval", "period-matrix", "--point=-1.1,0.25+0.1j")
    assert code == 0
    rep = json.loads(out)
    assert rep["siegel"] is True


def test_eval_theta(capsys):
    code, out = run(capsys, "eval", "theta", "--point=-1.1,0.25+0.1j",
                    "--radius", "8")
    assert code == 0
    rep = json.loads(out)
    assert set(rep["constants"]) == {"f1", "f2", "f3"}


def test_quad_small(capsys):
    code, out = run(capsys, "quad", "--grid", "8x8", "--radius", "6",
                    "--umax", "6", "--gauss", "3", "--tolerance", "5e-3")
    assert code == 0
    rep = json.loads(out)
    assert rep["reflection_relation_residual"] < 5e-3


def test_unknown_subcommand_usage_error(capsys):
    assert main(["frobnicate"]) == 2
    assert main([]) == 2


def test_failing_check_sets_exit_one(capsys):
    code, out = run(capsys, "quad", "--grid", "4x4", "--radius", "4",
                    "--umax", "4", "--gauss", "2", "--f", "P6sq")
    assert code == 1  # refused integrand reported as failure, not a crash
    rep = json.loads(out)
    assert rep["pass"] is False and "error" in rep


def test_report_writing(tmp_path, capsys):
    out_path = tmp_path / "rep.json"
    code, _ = run(capsys, "--report", str(out_path), "verify", "presentations")
    assert code == 0
    assert json.loads(out_path.read_text())["pass"] is True


def test_sanitize_complex():
    blob = dumps({"v": 1 + 2j, "arr": [(1, 2)], "f": 0.1})
    rep = json.loads(blob)
    assert rep["v"] == {"re": 1.0, "im": 2.0}
    assert rep["schema_version"] == 1
