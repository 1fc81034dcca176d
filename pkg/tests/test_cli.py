"""Command-line surface: output schemas, exit codes, determinism."""

import json
import os
import subprocess
import sys

import pytest

from surfqp.cli import main

# keep CLI runs cheap
FAST = ["--trials", "15", "--max-word-len", "3"]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_goldman_example(capsys):
    code, out, _ = run(capsys, "goldman", "--genus", "1", "--punctures", "0", "p1", "q1")
    assert code == 0
    assert json.loads(out) == [{"class": "p1*q1", "coeff": "1"}]


def test_eta_fixture(capsys):
    code, out, _ = run(capsys, "eta", "--genus", "1", "--punctures", "1", "q1", "p1")
    assert code == 0
    assert json.loads(out) == [
        {"coeff": "-1", "word": "1"},
        {"coeff": "1", "word": "p1"},
        {"coeff": "-1", "word": "q1*p1"},
    ]


def test_eta_s_fixture(capsys):
    code, out, _ = run(capsys, "eta-s", "p1", "q1")
    assert code == 0
    assert {(t["word"], t["coeff"]) for t in json.loads(out)} == {
        ("1", "1"), ("p1", "1"), ("p1*q1", "1"), ("q1", "-1")}


def test_dbl_s_output(capsys):
    code, out, _ = run(capsys, "dbl-s", "z1", "z1")
    assert code == 0
    assert json.loads(out) == [
        {"coeff": "-1", "words": ["1", "z1^2"]},
        {"coeff": "1", "words": ["z1^2", "1"]},
    ]


def test_triple_runs(capsys):
    code, out, _ = run(capsys, "triple", "p1", "q1", "z1")
    assert code == 0
    terms = json.loads(out)
    assert terms and all(len(t["words"]) == 3 for t in terms)


def test_rep_bracket_display(capsys):
    code, out, _ = run(capsys, "rep-bracket", "--dim", "2", "p1_1_1", "q1_2_2")
    assert code == 0
    assert json.loads(out) == {
        "den": [0, 0, 0],
        "terms": [
            {"coeff": "1", "monomial": "p1_1_2*q1_2_1"},
            {"coeff": "-1", "monomial": "p1_2_1*q1_1_2"},
        ],
    }


def test_trace_bracket_dim_one(capsys):
    code, out, _ = run(capsys, "trace-bracket", "--genus", "1", "--punctures", "0",
                       "--dim", "1", "p1", "q1")
    assert code == 0
    assert json.loads(out) == {
        "den": [0, 0], "terms": [{"coeff": "2", "monomial": "p1_1_1*q1_1_1"}]}


def test_ev_command(tmp_path, capsys):
    pt = tmp_path / "pt.json"
    pt.write_text(json.dumps([
        [["1", "2"], ["0", "1"]],
        [["1", "0"], ["3", "1"]],
        [["2", "1"], ["1", "1"]],
    ]))
    code, out, _ = run(capsys, "ev", "--dim", "2", "tr(p1*q1^-1)+det(z1)", str(pt))
    assert code == 0
    assert json.loads(out) == {"value": "-3"}


def test_ev_rejects_singular_point(tmp_path, capsys):
    pt = tmp_path / "pt.json"
    pt.write_text(json.dumps([[["1", "1"], ["1", "1"]]] * 3))
    code, _, err = run(capsys, "ev", "tr(p1)", str(pt))
    assert code == 2
    assert "invertible" in err


def test_word_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "eta", "p1*w2", "q1")
    assert code == 2
    assert "position" in err


def test_expression_parse_error_position(capsys):
    code, _, err = run(capsys, "rep-bracket", "p1_1_1 + ?", "q1_1_1")
    assert code == 2
    assert "position" in err


def test_expression_entry_out_of_range(capsys):
    code, _, err = run(capsys, "rep-bracket", "--dim", "2", "p1_3_1", "q1_1_1")
    assert code == 2
    assert "dim" in err


def test_verify_fox_json(capsys):
    code, out, _ = run(capsys, "verify", "fox", "--json", "--seed", "3", *FAST)
    assert code == 0
    report = json.loads(out)
    assert report["ok"] and report["suite"] == "fox"


def test_verify_human_output(capsys):
    code, out, _ = run(capsys, "verify", "double", "--seed", "3", *FAST)
    assert code == 0
    assert out.strip().endswith("PASS")
    assert "cross-oracle" in out


def test_moment_check_rejects_non_moment(capsys):
    code, out, _ = run(capsys, "moment-check", "--word", "p1", "--json",
                       "--trials", "3", "--seed", "1")
    assert code == 1
    report = json.loads(out)
    assert not report["ok"]


def test_moment_check_accepts_boundary(capsys):
    code, out, _ = run(capsys, "moment-check", "--genus", "0", "--punctures", "2",
                       "--json", "--trials", "3", "--seed", "1")
    assert code == 0
    assert json.loads(out)["ok"]


def test_verify_json_is_deterministic(capsys):
    args = ["verify", "quasi-poisson", "--json", "--seed", "11", "--trials", "10",
            "--max-word-len", "3"]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_cli_deterministic_across_processes():
    # different hash seeds must not leak into the report bytes
    args = [sys.executable, "-m", "surfqp.cli", "verify", "fox", "--json",
            "--seed", "5", "--trials", "10"]
    outs = []
    for hashseed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=hashseed)
        proc = subprocess.run(args, capture_output=True, text=True, env=env)
        assert proc.returncode == 0, proc.stderr
        outs.append(proc.stdout)
    assert outs[0] == outs[1]
