import json

import pytest

from app.cli import run
from app.service.models import InvariantReport
from tests.conftest import HOPF_POSITIVE, TREFOIL


def test_kh_table(capsys):
    assert run(["kh", "--pd", TREFOIL]) == 0
    out = capsys.readouterr().out
    assert "[kh]" in out
    assert "kh = q^-1 + q^-3 + t^-2 q^-5" in out


def test_secondary_json(capsys):
    assert run(["secondary", "--pd", "trefoil", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["tables"]["kk"]["entries"] == {"(0,-1)": 1, "(0,-3)": 1}
    assert payload["polynomials"]["P"] == "q^-1 + q^-3"
    assert "timing_ms" not in payload
    assert payload["details"]["exactness"]["unexpected"] == []


def test_json_is_deterministic(capsys):
    run(["bn", "--pd", TREFOIL, "--format", "json"])
    first = capsys.readouterr().out
    run(["bn", "--pd", TREFOIL, "--format", "json", "--workers", "2"])
    assert capsys.readouterr().out == first


def test_bn_stable_row(capsys):
    assert run(["bn", "--pd", TREFOIL, "--jmin", "-9"]) == 0
    out = capsys.readouterr().out
    assert "<=-9" in out
    assert "stable_column: 0:2" in out


def test_latex(capsys):
    assert run(["kh", "--pd", "figure_eight", "--format", "latex"]) == 0
    assert r"\begin{tabular}" in capsys.readouterr().out


def test_timing(capsys):
    assert run(["filtered", "--pd", HOPF_POSITIVE, "--format", "json", "--timing"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["timing_ms"] >= 0
    assert payload["degrees"]["filtered"] == {"0": 2, "2": 2}


def test_file_input(tmp_path, capsys):
    path = tmp_path / "trefoil.pd"
    path.write_text(TREFOIL + "\n")
    assert run(["thin", "--file", str(path)]) == 0
    assert "kprime = t^-3 q^-6" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["kh", "--pd", "PD[X(1,2,3,4)]"],
        ["kh", "--pd", "not a diagram"],
        ["thin", "--pd", TREFOIL, "--s", "0"],
        ["reduced", "--pd", HOPF_POSITIVE],
        ["ss", "--pd", TREFOIL, "--flavor", "graded"],
        ["bn", "--pd", TREFOIL, "--jmin", "0", "--jmax", "-4"],
        ["kh", "--pd", TREFOIL, "--pd2", TREFOIL],
        ["kh"],
    ],
)
def test_invalid_input_exits_one(argv, capsys):
    assert run(argv) == 1
    assert "Error:" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert run(["kh", "--file", str(tmp_path / "absent.pd")]) == 1


def test_check_pair(capsys):
    assert run(["check", "--pd", "trefoil", "--pd2", "trefoil_kinked"]) == 0
    assert "[FAIL]" not in capsys.readouterr().out


def test_reduced_corpus_skips_links(capsys):
    assert run(["reduced", "--corpus", "--format", "json"]) == 0
    out = capsys.readouterr().out
    assert "PD[X(1,3,2,4),X(3,1,4,2)]" not in out


def test_report_json_round_trips(capsys):
    run(["ss", "--pd", "trefoil", "--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    report = InvariantReport.model_validate(payload)
    assert report.to_json_dict() == payload
    assert report.tables["E_1"][(-5, 2)] == 1
