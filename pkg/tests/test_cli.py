"""CLI: golden outputs, exit codes, and the suite runner."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from quadricops import cli
from quadricops.suites import (CheckResult, SuiteReport, SUITES, emit,
                               run_suite)

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, argv):
    code = cli.main(argv)
    return code, capsys.readouterr().out


GOLDEN_CASES = [
    ("verify_algebra_core_k2.json",
     ["verify", "algebra-core", "--k", "2", "--format", "json"]),
    ("shapovalov_d1_k2.json",
     ["shapovalov", "--d", "1", "--k", "2", "--format", "json"]),
    ("reduce_commutator_k2.json",
     ["reduce", "XX1*YY2 - YY2*XX1", "--format", "json"]),
    ("harmonic_d2_k2.json",
     ["harmonic", "--d", "2", "--k", "2", "--format", "json"]),
    ("counterexample_n2.json",
     ["counterexample-n2", "--format", "json"]),
    ("fourier_word_k2.json",
     ["fourier-transform", "x1*y2 - 3*E", "--format", "json"]),
]


@pytest.mark.parametrize("golden,argv", GOLDEN_CASES,
                         ids=[g for g, _ in GOLDEN_CASES])
def test_golden_output(capsys, golden, argv):
    code, out = run_cli(capsys, argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_golden_output_is_deterministic(capsys):
    _, first = run_cli(capsys, ["verify", "cli", "--format", "json"])
    _, second = run_cli(capsys, ["verify", "cli", "--format", "json"])
    assert first == second


def test_exit_code_success(capsys):
    code, _ = run_cli(capsys, ["verify", "weyl", "--k", "2"])
    assert code == 0


def test_exit_code_verification_failure(capsys):
    # a suite with a failing check exits 1 through the normal dispatch
    SUITES["injected-failure"] = lambda k: [
        CheckResult("always-fails", "synthetic failing check", False, "residue")]
    try:
        code, out = run_cli(capsys, ["verify", "injected-failure"])
    finally:
        del SUITES["injected-failure"]
    assert code == 1
    assert "FAIL" in out


def test_exit_code_usage_errors(capsys):
    assert cli.main(["reduce", "x5"]) == 2           # index out of range
    assert cli.main(["reduce", "x1 +"]) == 2         # parse error
    assert cli.main(["verify", "no-such-suite"]) == 2
    assert cli.main(["fourier-transform", "Delta"]) == 2
    assert cli.main(["reduce", "x1", "--k", "1"]) == 2
    assert cli.main(["kelvin", "dx1"]) == 2
    capsys.readouterr()


def test_argparse_usage_exit_code():
    proc = subprocess.run([sys.executable, "-m", "quadricops.cli",
                           "no-such-command"], capture_output=True)
    assert proc.returncode == 2


def test_max_degree_cap_env(capsys):
    old = os.environ.get("QUADRICOPS_MAX_DEGREE")
    os.environ["QUADRICOPS_MAX_DEGREE"] = "1"
    try:
        assert cli.main(["reduce", "x1^6 * dx1"]) == 2
        assert cli.main(["harmonic", "--d", "5"]) == 2
        code, _ = run_cli(capsys, ["verify", "algebra-core"])
        assert code == 0  # suites shrink their corpora under the cap
    finally:
        if old is None:
            del os.environ["QUADRICOPS_MAX_DEGREE"]
        else:
            os.environ["QUADRICOPS_MAX_DEGREE"] = old
    capsys.readouterr()


def test_emit_empty_suite():
    report = SuiteReport("empty", 2, [])
    assert report.exit_status == 0
    text = emit(report, "text").decode()
    assert "exit status: 0" in text


def test_emit_json_roundtrip():
    report = run_suite("cli", 2)
    parsed = SuiteReport.from_json_obj(json.loads(emit(report, "json")))
    assert parsed == report


def test_moment_verify_text(capsys):
    code, out = run_cli(capsys, ["moment", "verify", "--k", "2"])
    assert code == 0
    assert "relation Q(w)" in out and "FAIL" not in out


def test_checks_sorted_by_id():
    report = run_suite("harmonic-kelvin", 2)
    ids = [c.check_id for c in report.checks]
    assert ids == sorted(ids)
