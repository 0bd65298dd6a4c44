import json
import subprocess
import sys

import pytest

from qhsing import __version__
from qhsing.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_p8(capsys):
    code, out, _ = run(capsys, "analyze", "z1^3+z2^3+z3^3")
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == ["input", "weights", "invariants", "link", "lift", "meta"]
    inv = doc["invariants"]
    assert inv["type"] == "P8"
    assert inv["milnor_number"] == 8
    assert inv["characteristic_polynomial"]["factored"] == "Phi1^2*Phi3^3"
    assert doc["weights"]["kappa"] == "1"
    assert doc["link"]["rational_sphere"] is False
    assert doc["lift"]["lifts_to_IH"] == "no"
    assert doc["meta"]["version"] == __version__


def test_analyze_e6(capsys):
    code, out, _ = run(capsys, "analyze", "z1^3+z2^4+z3^2", "--p", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["invariants"]["type"] == "E6"
    assert doc["invariants"]["milnor_number"] == 6
    assert doc["weights"]["kappa"] == "13/12"
    assert doc["weights"]["a"] == ["1/3", "1/4", "1/2"]
    assert doc["lift"]["lifts_to_IH"] == "yes"
    assert doc["lift"]["alpha"] == "-5/6"


def test_analyze_respects_variable_order(capsys):
    _, out, _ = run(capsys, "analyze", "x^3+y^4+z^2", "--vars", "z,y,x")
    doc = json.loads(out)
    assert doc["input"]["variables"] == ["z", "y", "x"]
    assert doc["weights"]["a"] == ["1/2", "1/4", "1/3"]
    assert doc["invariants"]["type"] == "E6"


def test_analyze_natural_sort(capsys):
    _, out, _ = run(capsys, "analyze", "z10^2+z2^3+z1^2")
    assert json.loads(out)["input"]["variables"] == ["z1", "z2", "z10"]


@pytest.mark.parametrize(
    "argv, code",
    [
        (["analyze", "z1^2+z1^3"], 3),
        (["analyze", "z1^2+z2^2+z3^"], 2),
        (["analyze", "2z1^2+z2^2"], 2),
        (["analyze", "z1^2*z2^2"], 5),
        (["analyze", "x^2+y^2", "--vars", "x,y,z"], 5),
        (["analyze", "x+y^2"], 4),
        (["analyze", "x^2"], 2),
        (["catalog", "X9", "--n", "1", "--modulus", "2"], 2),
        (["catalog", "P8", "--n", "1"], 2),
        (["tables", "simple", "--n", "0"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == ""
    assert err.startswith("error:")


def test_analyze_markdown(capsys):
    code, out, _ = run(capsys, "analyze", "z1^3+z2^3+z3^3", "--format", "markdown")
    assert code == 0
    assert out.startswith("#")
    assert "P8" in out


def test_json_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "qhsing", "analyze", "x*y + y^100 + z^2 + t^2", "--vars", "x,y,z,t"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    doc = json.loads(first)
    assert doc["invariants"]["type"] == "A1"
    assert doc["weights"]["a"] == ["99/100", "1/100", "1/2", "1/2"]


def test_tables_json(capsys):
    code, out, _ = run(capsys, "tables", "parabolic", "--n", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["table"] == "parabolic"
    assert doc["rows"][0]["expanded"] == "t^8 - t^7 + t^6 + 2*t^5 - 2*t^4 + 2*t^3 + t^2 - t + 1"


def test_tables_markdown_k_range(capsys):
    code, out, _ = run(capsys, "tables", "simple", "--n", "2", "--k-range", "4..5")
    assert code == 0
    for name in ("A4", "A5", "D4", "D5", "E6", "E7", "E8"):
        assert f"| {name} |" in out
    assert "| A3 |" not in out


def test_catalog_command(capsys):
    code, out, _ = run(capsys, "catalog", "A3", "--n", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["normal_form"] == "z1^4 + z2^2 + z3^2"
    assert doc["weights"] == doc["template_weights"] == ["1/4", "1/2", "1/2"]
    code, out, _ = run(capsys, "catalog", "P8", "--n", "3", "--modulus", "1")
    assert code == 0
    assert "z1*z2*z3" in out and "kappa: 3/2" in out


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--points", "20")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "all checks passed"
    assert all(line.startswith("[PASS]") for line in lines[:-1])
