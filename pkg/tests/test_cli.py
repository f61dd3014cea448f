import json
import os
from pathlib import Path

import pytest

from conftest import DATA
from tropgroup import cli
from tropgroup.documents import load_document, serialize_document


@pytest.fixture
def run(tmp_path, capsys):
    """Run the CLI with no user config and return (exit code, parsed report, raw stdout)."""
    def _run(command, name, *flags):
        path = name if os.path.isabs(name) else os.path.join(DATA, name)
        code = cli.run([command, "--in", path, "--config", str(tmp_path / "none.yaml"), *flags])
        out = capsys.readouterr().out
        return code, json.loads(out), out
    return _run


def test_mul(run):
    code, report, _ = run("mul", "mul.json")
    assert code == 0
    assert report["status"] == "ok"
    assert report["result"] == {"kind": "matrix", "matrices": [[["0", "4"], ["2", "1"]]], "options": {}}


def test_rank(run):
    code, report, _ = run("rank", "order_two_group.json")
    assert code == 2  # rank takes matrix or matrix_list documents
    code, report, _ = run("rank", "mul.json")
    assert code == 0
    assert report["ranks"] == [{"full_row_rank": True}, {"full_row_rank": True}]


def test_verify(run):
    code, report, _ = run("verify", "order_two_group.json")
    assert code == 0
    assert report["group"] == {"dimension": 2, "order": 2, "neutral_index": 1, "mode": "verified"}
    assert report["periodic_bound_check"] == {"order": 2, "n_factorial": 2, "ok": True}


def test_monomialize(run):
    code, report, _ = run("monomialize", "order_two_group.json")
    assert code == 0
    rep = report["representation"]
    assert rep["trace"] == []
    assert rep["target_dimension"] == 2
    assert rep["images"] == [
        {"sigma": [1, 2], "d": ["0", "0"]},
        {"sigma": [2, 1], "d": ["-1", "1"]},
    ]


def test_monomialize_ones_family_reduces(run):
    code, report, _ = run("monomialize", "ones_family.json")
    assert code == 0
    assert report["options"]["assume_group"] is True
    rep = report["representation"]
    assert rep["sample_only"] is True
    assert rep["target_dimension"] == 1
    assert len(rep["trace"]) == 1
    assert [img["d"] for img in rep["images"]] == [["-1"], ["0"], ["1"]]


def test_analyze(run):
    code, report, _ = run("analyze", "order_two_group.json")
    assert code == 0
    analysis = report["analysis"]
    assert analysis["index"] == 2
    assert analysis["n_factorial_bound"] == 2
    assert analysis["bound_ok"] and analysis["diagonal_abelian_ok"] and analysis["diagonal_torsion_free_ok"]


def test_analyze_scalar_family(run):
    code, report, _ = run("analyze", "scalar_family.json")
    assert code == 0
    assert report["analysis"]["index"] == 1
    assert report["analysis"]["torsion_check"] == "checked up to exponent 64"


def test_closure(run):
    code, report, _ = run("closure", "s3_generators.json")
    assert code == 0
    assert report["options"]["closure_cap"] == 100
    assert report["closure"]["order"] == 6
    assert report["group"]["order"] == 6
    assert report["periodic_bound_check"]["ok"] is True


def test_realize(run):
    code, report, _ = run("realize", "s3_wreath.json")
    assert code == 0
    assert len(report["realization"]["matrices"]) == 6
    assert report["group"]["order"] == 6


def test_assume_group_flag_overrides_document(run):
    code, report, _ = run("monomialize", "order_two_group.json", "--assume-group")
    assert code == 0
    assert report["group"]["mode"] == "assumed"


@pytest.mark.parametrize("command, name, code, error", [
    ("mul", "ragged.json", 2, "ParseError"),
    ("mul", "mul_mismatch.json", 2, "DimensionMismatch"),
    ("monomialize", "not_closed.json", 3, "GroupAxiomFailure"),
    ("closure", "unbounded_closure.json", 3, "CapExceeded"),
    ("realize", "mul.json", 2, "ParseError"),
])
def test_failures(run, command, name, code, error):
    got, report, _ = run(command, name)
    assert got == code
    assert report["status"] == "error"
    assert report["error"]["name"] == error


def test_not_closed_names_the_witness(run):
    _, report, _ = run("verify", "not_closed.json")
    assert report["error"]["kind"] == "NotClosed"
    assert set(report["error"]["witnesses"]) >= {"left", "right"}


def test_cap_flag_overrides_document(run):
    code, report, _ = run("closure", "s3_generators.json", "--cap", "3")
    assert code == 3
    assert report["error"]["name"] == "CapExceeded"


def test_missing_input(run, tmp_path):
    code, report, _ = run("mul", str(tmp_path / "absent.json"))
    assert code == 2


@pytest.mark.parametrize("command, name", [
    ("mul", "mul.json"),
    ("verify", "order_two_group.json"),
    ("monomialize", "ones_family.json"),
    ("analyze", "scalar_family.json"),
    ("closure", "s3_generators.json"),
    ("realize", "s3_wreath.json"),
])
def test_reports_are_byte_stable(run, tmp_path, command, name):
    _, _, first = run(command, name)
    _, _, second = run(command, name)
    assert first == second

    # Re-serialized input gives the same report.
    copy = tmp_path / name
    copy.write_text(serialize_document(load_document(Path(DATA) / name)))
    _, _, third = run(command, str(copy))
    assert third == first


def test_verbose_writes_to_stderr(tmp_path, capsys):
    code = cli.run(["analyze", "--in", os.path.join(DATA, "ones_family.json"),
                    "--config", str(tmp_path / "none.yaml"), "--verbose"])
    captured = capsys.readouterr()
    assert code == 0
    assert "reduction 1" in captured.err
    assert "analysis" in captured.err
    json.loads(captured.out)


def test_config_file_sets_indent(tmp_path, capsys):
    config = tmp_path / "config.yaml"
    config.write_text("indent: 0\n")
    cli.run(["mul", "--in", os.path.join(DATA, "mul.json"), "--config", str(config)])
    out = capsys.readouterr().out
    assert out.startswith('{\n"command": "mul"')


def test_unknown_command_exits_via_argparse():
    with pytest.raises(SystemExit):
        cli.parse_args(["frobnicate", "--in", "x.json"])


@pytest.mark.parametrize("command, name", [
    ("mul", "mul.json"),
    ("verify", "order_two_group.json"),
    ("monomialize", "order_two_group.json"),
    ("analyze", "order_two_group.json"),
    ("monomialize", "ones_family.json"),
    ("monomialize", "not_closed.json"),
])
def test_reports_match_golden_files(run, command, name):
    _, _, out = run(command, name)
    golden = Path(DATA) / "golden" / f"{command}_{name}"
    assert out == golden.read_text(encoding="utf-8")


def test_realize_keeps_matrices_when_elements_repeat(run):
    code, report, _ = run("realize", "repeated_wreath.json")
    assert code == 0
    assert report["realization"]["matrices"][0] == [["-inf", "1"], ["-1", "-inf"]]
    assert len(report["realization"]["matrices"]) == 3
    assert report["group"] is None
    assert report["group_failure"]["name"] == "DuplicateElements"
    assert report["group_failure"]["witnesses"]["first"] == 1
    assert report["group_failure"]["witnesses"]["second"] == 3


def test_verbose_from_config_renders_errors(tmp_path, capsys):
    config = tmp_path / "config.yaml"
    config.write_text("verbose: true\n")
    code = cli.run(["monomialize", "--in", os.path.join(DATA, "not_closed.json"), "--config", str(config)])
    captured = capsys.readouterr()
    assert code == 3
    assert "GroupAxiomFailure [NotClosed]" in captured.err
