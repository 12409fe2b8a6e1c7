import json
import subprocess
import sys

import pytest

from charvar.cli import main


def run(*args):
    """Run the CLI in a subprocess and return (exit code, stdout bytes, stderr text)."""
    proc = subprocess.run([sys.executable, "-m", "charvar", *args], capture_output=True)
    return proc.returncode, proc.stdout, proc.stderr.decode()


def test_betti_x0_g2():
    code, out, _ = run("betti", "--space", "X0", "--genus", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["truncation"] == "exact"
    assert doc["betti"] == ["1", "0", "1", "0", "1", "0", "17"]
    assert doc["provenance"]


def test_betti_symprod(capsysbinary):
    assert main(["betti", "--space", "SymProd", "--n", "1", "--genus", "4"]) == 0
    doc = json.loads(capsysbinary.readouterr().out)
    assert doc["betti"] == ["1", "8", "1"]


def test_betti_series_needs_truncation(capsys):
    assert main(["betti", "--space", "X0eq", "--genus", "2"]) == 2
    assert "--truncate" in capsys.readouterr().err


def test_betti_series_with_truncation(capsysbinary):
    assert main(["betti", "--space", "X0eq", "--genus", "2", "--truncate", "6"]) == 0
    doc = json.loads(capsysbinary.readouterr().out)
    assert doc["truncation"] == 6 and len(doc["betti"]) == 7


@pytest.mark.parametrize(
    "argv",
    [
        ["betti", "--space", "X0", "--genus", "1"],
        ["betti", "--space", "X0", "--genus", "65"],
        ["betti", "--space", "Nope", "--genus", "3"],
        ["betti", "--space", "PSLodd", "--genus", "3"],
        ["betti", "--space", "SymProd", "--genus", "3"],
        ["betti", "--space", "X0", "--genus", "3", "--truncate", "-1"],
        ["verify", "--genus-max", "1"],
        ["torelli-table", "--genus", "1"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert main(argv) == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as err:
        main(["betti", "--genus", "2"])
    assert err.value.code == 2


def test_verify_passes():
    code, out, _ = run("verify", "--genus-max", "8")
    assert code == 0
    report = json.loads(out)
    assert report["failed"] == 0 and report["failures"] == []
    assert report["passed"] == len(report["results"])


def test_verify_parallel_matches_serial():
    _, serial, _ = run("verify", "--genus-max", "6")
    _, parallel, _ = run("verify", "--genus-max", "6", "--jobs", "3")
    assert serial == parallel


def test_verify_with_corrupted_formula_exits_1():
    code, out, err = run("--inject-fault", "c-drop-term", "verify", "--genus-max", "3")
    assert code == 1
    report = json.loads(out)
    first = report["failures"][0]
    assert first["check"] == "oracle_identity"
    assert "NotDivisible" in first["detail"] and "C(t," in first["detail"]
    assert "NotDivisible" in err


def test_verify_with_wrong_exponent_reports_mismatch_degree():
    code, out, _ = run("--inject-fault", "c-exponent", "verify", "--genus-max", "2")
    assert code == 1
    first = json.loads(out)["failures"][0]
    assert "first mismatch at t^6" in first["detail"]


def test_betti_with_corrupted_formula_exits_3():
    code, out, err = run("--inject-fault", "c-drop-term", "betti", "--space", "X0", "--genus", "2")
    assert code == 3
    assert out == b""
    assert "NotDivisible" in err and "C(t,2)" in err


def test_betti_irr_corrupted_exits_3():
    code, _, err = run("--inject-fault", "irr-printed", "betti", "--space", "R0irr", "--genus", "3")
    assert code == 3
    assert "BettiViolation" in err


@pytest.mark.parametrize("fmt", ["json", "csv", "latex"])
def test_output_is_deterministic(fmt):
    args = ("torelli-table", "--genus", "3", "--format", fmt)
    first, second = run(*args), run(*args)
    assert first[0] == 0 and first[1] == second[1]


def test_torelli_table_json():
    code, out, _ = run("torelli-table", "--genus", "3", "--format", "json")
    doc = json.loads(out)
    prym = {r["degree"]: r["prym"] for r in doc["decomposition"]}
    assert prym[10] == "378"
    assert all(v == "0" for k, v in prym.items() if k != 10)


def test_torelli_table_odd_csv():
    code, out, _ = run("torelli-table", "--genus", "2", "--odd", "--format", "csv")
    assert code == 0
    assert "5,,,30,False,True" in out.decode().splitlines()


def test_table1_json():
    code, out, _ = run("table1", "--format", "json")
    rows = json.loads(out)["rows"]
    assert len(rows) == 12
    assert rows[5] == {"group": "H*_eq(R₀(π))", "torelli_trivial": "yes", "reference": "Atiyah-Bott"}


def test_table1_latex():
    code, out, _ = run("table1", "--format", "latex")
    assert code == 0
    assert out.decode().count(r"\\") == 13


def test_csv_and_latex_betti():
    _, csv_out, _ = run("betti", "--space", "R0", "--genus", "2", "--format", "csv")
    lines = csv_out.decode().splitlines()
    assert lines[0].startswith("# space=R0")
    assert "degree,betti" in lines and "6,1" in lines
    _, tex, _ = run("betti", "--space", "R0", "--genus", "2", "--format", "latex")
    assert r"\begin{tabular}" in tex.decode()
