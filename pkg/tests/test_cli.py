import json

import jsonschema
import pytest

from qtperm.cli import main
from qtperm.report import (ACTION_REPORT_SCHEMA, STEP4_SCHEMA, SWEEP_SCHEMA,
                           action_report_document, step4_document,
                           sweep_document)
from qtperm.analysis import analyze
from qtperm.constructions import symmetric_group
from qtperm.verifier import SweepConfig, step4_check, sweep


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_then_analyze(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", "a7-pairs")
    assert code == 0
    path = tmp_path / "a7p.gens"
    path.write_text(out)
    code, out, _ = run(capsys, "analyze", str(path))
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, ACTION_REPORT_SCHEMA)
    assert doc["degree"] == 21
    assert doc["order"] == 2520
    assert doc["verdict"] == {"status": "quasi_transitive", "t": 12,
                              "witnesses": None}


def test_analyze_require_quasi_failure(tmp_path, capsys):
    path = tmp_path / "c4.gens"
    path.write_text("degree 4\n(1 2 3 4)\n")
    code, out, _ = run(capsys, "analyze", str(path), "--require-quasi")
    assert code == 1
    doc = json.loads(out)
    assert doc["verdict"]["status"] == "constant_one"


def test_analyze_verbose_summary(tmp_path, capsys):
    path = tmp_path / "c4.gens"
    path.write_text("degree 4\n(1 2 3 4)\n")
    code, out, err = run(capsys, "analyze", str(path), "--verbose")
    assert code == 0
    assert "degree 4" in err and "order 4" in err


def test_analyze_parse_error_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.gens"
    path.write_text("degree 3\n(1 2)(1 3)\n")
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 2
    assert "repeated" in err


def test_analyze_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "analyze", "/nonexistent/file.gens")
    assert code == 2
    assert err


def test_unknown_subcommand_exit_2(capsys):
    code, _, _ = run(capsys, "bogus")
    assert code == 2


def test_construct_psl2_cosets(capsys):
    code, out, _ = run(capsys, "construct", "psl2", "--f", "3",
                       "--action", "cosets")
    assert code == 0
    assert out.startswith("degree 28\n")


def test_construct_sum_pipeline(tmp_path, capsys):
    code, f5, _ = run(capsys, "construct", "frobenius", "--p", "5")
    assert code == 0
    path = tmp_path / "f5.gens"
    path.write_text(f5)
    code, out, _ = run(capsys, "construct", "sum", str(path), str(path))
    assert code == 0
    assert out.startswith("degree 10\n")
    both = tmp_path / "sum.gens"
    both.write_text(out)
    code, out, _ = run(capsys, "analyze", str(both))
    assert code == 0
    doc = json.loads(out)
    assert len(doc["orbits"]) == 2


def test_construct_sum_needs_two_files(capsys):
    code, _, err = run(capsys, "construct", "sum")
    assert code == 2
    assert "two input files" in err


def test_verify_step4(capsys):
    code, out, _ = run(capsys, "verify", "--only", "step4")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, STEP4_SCHEMA)
    assert doc["product"] == 210
    assert doc["gcd"] == 2
    assert doc["contradiction"] is True


def test_verify_restricted_sweep(capsys):
    code, out, err = run(capsys, "verify", "--max-degree", "20",
                         "--max-order", "100", "--verbose")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SWEEP_SCHEMA)
    assert doc["findings"] == []
    assert "finding(s)" in err


def test_verify_env_var_defaults(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("QTPERM_MAX_DEGREE", "15")
    monkeypatch.setenv("QTPERM_MAX_ORDER", "50")
    code, out, _ = run(capsys, "verify")
    assert code == 0
    doc = json.loads(out)
    assert doc["skipped"] > 0


def test_report_documents_validate():
    report = analyze(symmetric_group(4).group)
    jsonschema.validate(action_report_document(report, label="S4"),
                        ACTION_REPORT_SCHEMA)
    jsonschema.validate(step4_document(step4_check()), STEP4_SCHEMA)
    result = sweep(SweepConfig(max_total_degree=12, families=("cyclic",)))
    jsonschema.validate(sweep_document(result), SWEEP_SCHEMA)


def test_report_points_are_one_based():
    report = analyze(symmetric_group(3).group)
    doc = action_report_document(report)
    assert doc["orbits"][0]["points"] == [1, 2, 3]
    assert doc["pair_classes"][0]["representative"] == [1, 2]
