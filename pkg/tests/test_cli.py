import subprocess
import sys
from pathlib import Path

import pytest

from egh_liaison.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def records(text):
    return dict(line.split("=", 1) for line in text.splitlines() if "=" in line)


def test_hilbert_table(capsys):
    code, out, _ = run(capsys, "hilbert", DATA / "ci22.txt")
    assert code == 0
    rows = [tuple(map(int, line.split())) for line in out.splitlines()[1:]]
    assert rows == [(0, 1), (1, 2), (2, 1)]


def test_hilbert_almost_ci_records(capsys):
    code, out, _ = run(capsys, "hilbert", DATA / "almost_ci.txt", "--format", "records")
    rec = records(out)
    assert code == 0 and rec["hf.0"] == "1" and rec["hf.1"] == "2" and "hf.2" not in rec


def test_hilbert_non_artinian(capsys):
    code, _, err = run(capsys, "hilbert", DATA / "hypersurface.txt")
    assert code == 2 and "degree-bound" in err
    code, out, _ = run(capsys, "hilbert", DATA / "hypersurface.txt", "--degree-bound", "3")
    assert code == 0 and out.splitlines()[-1].split() == ["3", "2"]


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "hilbert", DATA / "broken.txt")
    assert code == 2 and "line 3" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "hilbert", DATA / "nope.txt")
    assert code == 2


def test_witness(capsys):
    code, out, _ = run(capsys, "--format", "records", "witness", "3,3;2,2;1,1")
    rec = records(out)
    assert code == 0
    assert rec["witness"] == "<x1^3, x1^2*x2, x1*x2^2, x2^3>" and rec["hf_witness"] == "(1,2,3)"


def test_link(capsys):
    code, out, _ = run(capsys, "link", DATA / "point.txt", DATA / "ci22.txt", "--format", "records")
    rec = records(out)
    assert code == 0 and rec["target"] == "<x1^2, x1*x2, x2^2>" and rec["check.hf_formula"] == "true"


def test_link_self_is_an_error(capsys):
    code, _, err = run(capsys, "link", DATA / "ci22.txt", DATA / "ci22.txt")
    assert code == 2 and "unit" in err


def test_chain_records(capsys):
    code, out, _ = run(capsys, "chain", DATA / "almost_ci.txt", "--seed", "3", "--format", "records")
    rec = records(out)
    assert code == 0 and rec["type_chain"] == "2,2;1,1" and rec["seed"] == "3"
    assert rec["replay"].endswith("--seed 3 --max-steps 20")


def test_egh_almost_ci(capsys):
    code, out, _ = run(capsys, "egh", DATA / "almost_ci.txt", "--seed", "1", "--format", "records")
    rec = records(out)
    assert code == 0 and rec["verdict"] == "PASS" and rec["witness"] == "<x1^2, x1*x2, x2^2>"


def test_egh_ci(capsys):
    code, out, _ = run(capsys, "egh", DATA / "ci23.txt", "--seed", "1", "--format", "records")
    rec = records(out)
    assert code == 0 and rec["witness"] == "<x1^2, x2^3>" and rec["steps"] == "0"


def test_egh_pfaffian_fixture(capsys):
    code, out, _ = run(capsys, "egh", DATA / "pfaffian5.txt", "--seed", "9")
    assert code == 0 and "verdict                     PASS" in out


def test_egh_needs_seed(capsys):
    code, _, _ = run(capsys, "egh", DATA / "almost_ci.txt")
    assert code == 1


def test_egh_non_artinian_reports_seed(capsys):
    code, out, _ = run(capsys, "egh", DATA / "hypersurface.txt", "--seed", "4", "--format", "records")
    rec = records(out)
    assert code == 2 and rec["seed"] == "4" and "replay" in rec


def test_lpp(capsys):
    code, out, _ = run(capsys, "lpp", "2,2", "1,2,0", "--format", "records")
    assert code == 0 and records(out)["ideal"] == "<x1^2, x1*x2, x2^2>"
    code, out, _ = run(capsys, "lpp", "(2,2)", "(1,3)", "--format", "records")
    assert code == 2 and records(out)["achievable"] == "false"


def test_modlin(capsys):
    code, out, _ = run(capsys, "modlin", DATA / "line.txt", DATA / "line_link.txt",
                       "--g", "x3", "--j", "1", "--format", "records")
    rec = records(out)
    assert code == 0
    assert rec["I1'"] == "<x1, x2, x3>"
    assert rec["I2'"] == "<x3, x1^2, x1*x2, x2^2>"
    assert rec["check.colon_source"] == rec["check.colon_target"] == "true"


def test_modlin_zero_divisor(capsys):
    code, _, err = run(capsys, "modlin", DATA / "line.txt", DATA / "line_link.txt",
                       "--g", "x1", "--j", "1")
    assert code == 2 and "zero-divisor" in err


@pytest.mark.parametrize("argv", [
    ["selftest", "--bogus"], ["frobnicate"], [], ["--prime", "8", "witness", "2,2"],
    ["--format", "json", "witness", "2,2"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 1


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == 0
    assert "modlin" in capsys.readouterr().out


def test_prime_conflict_with_file(capsys):
    code, _, err = run(capsys, "--prime", "101", "hilbert", DATA / "ci22.txt")
    assert code == 1 and "conflicts" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "egh_liaison", "witness", "2,2;1,1",
                           "--format", "records"], capture_output=True, text=True)
    assert proc.returncode == 0 and "witness=<x1^2, x1*x2, x2^2>" in proc.stdout


def test_selftest_small_prime_runs(capsys):
    code, out, _ = run(capsys, "selftest", "--prime", "5")
    assert out.splitlines()[0] == "prime=5"
    assert out.splitlines()[-1] in ("all suites passed", "FAILED")
    assert code in (0, 3)
