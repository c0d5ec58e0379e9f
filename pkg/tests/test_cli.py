"""Command line interface: exit codes, output formats, determinism."""

import json

import pytest

from supertwist.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_roots_text(capsys):
    code, out, _ = run(capsys, "roots", "osp(1|4)")
    assert code == 0
    assert "osp(1|4)" in out
    assert "positive roots:" in out
    assert "carrier 1" in out and "carrier 2" in out


def test_roots_json(capsys):
    code, out, _ = run(capsys, "roots", "gl(2|2)", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["algebra"] == "gl(2|2)"
    assert doc["generators"] == 16
    assert len(doc["carriers"]) == 2


def test_rmatrix_passes(capsys):
    code, out, _ = run(capsys, "rmatrix", "gl(1|1)", "--jordanian-odd")
    assert code == 0
    assert "[PASS]" in out
    assert "odd Jordanian" in out
    assert "0 failures" in out


def test_rmatrix_clifford_mode(capsys):
    code, out, _ = run(capsys, "rmatrix", "sl(2|1)", "--clifford",
                       "--backend", "formal")
    assert code == 0
    assert "odd squares kept symbolic" in out


def test_chain_includes_reduction(capsys):
    code, out, _ = run(capsys, "chain", "sl(2|2)", "--backend", "formal")
    assert code == 0
    assert "reduction" in out
    assert "gl(1|1)" in out


def test_twist_stage_flag(capsys):
    code, out, _ = run(capsys, "twist", "osp(1|2)", "--stage", "1", "-K", "4",
                       "--backend", "formal")
    assert code == 0
    assert "cocycle" in out and "counit" in out


def test_json_reports_are_deterministic(capsys):
    code1, out1, _ = run(capsys, "twist", "gl(1|1)", "--json",
                         "--backend", "formal")
    code2, out2, _ = run(capsys, "twist", "gl(1|1)", "--json",
                         "--backend", "formal")
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["failures"] == 0
    for rep in doc["reports"]:
        assert set(rep) == {"identity", "backend", "truncation_order",
                            "status", "detail"}


def test_unknown_algebra_is_a_usage_error(capsys):
    code, _, err = run(capsys, "roots", "e8")
    assert code == 2
    assert "error" in err.lower()


def test_unsupported_twist_is_a_usage_error(capsys):
    code, _, err = run(capsys, "twist", "osp(3|2)")
    assert code == 2
    assert "unpaired" in err


def test_stage_out_of_range_is_a_usage_error(capsys):
    code, _, err = run(capsys, "twist", "gl(1|1)", "--stage", "3")
    assert code == 2
    assert "stages 1..1" in err


def test_bad_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
