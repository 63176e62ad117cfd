import io
import json
import subprocess
import sys

import pytest

from hrcontracts.cli import main

from conftest import spec_path

EX = spec_path("running_example.hrc")
INC = spec_path("incompatible.hrc")
MODES = spec_path("modes.hrc")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_meet_prints_no_double_failure_contract():
    code, out, _ = run("op", "meet", EX, "--left", "Cnom", "--right", "Cexc")
    assert code == 0
    assert "assume: !f2 || !f1 (24 runs)" in out


def test_dominance_is_reflexive():
    assert run("check", "dom", EX, "--left", "Cnom", "--right", "Cnom")[0] == 0


def test_fuse_over_local_port():
    code, out, _ = run("op", "fuse", EX, "--contracts", "C1,C2", "--ports", "x")
    assert code == 0
    assert "assume: !f1 || a (12 runs)" in out


def test_eliminate_running_example():
    code, out, _ = run("op", "eliminate", EX, "--contract", "C1", "--ports", "x")
    assert code == 0
    assert "assume: !f1 (4 runs)" in out and "promise: true (8 runs)" in out


@pytest.mark.parametrize("argv, expected", [
    (("check", "sat", EX, "--impl", "unit", "--contract", "C1"), 0),
    (("check", "sat", EX, "--impl", "TLE", "--contract", "Cexc"), 1),
    (("check", "dom", EX, "--left", "Cnom", "--right", "Cexc"), 1),
    (("check", "consistent", EX, "--contract", "C2"), 0),
    (("check", "compatible", INC, "--contract", "Picky"), 1),
    (("check", "compat-pair", INC, "--left", "Producer", "--right", "Consumer"), 1),
    (("check", "compat-pair", EX, "--left", "C2", "--right", "Cnom"), 1),
    (("check", "component", EX, "--name", "unit"), 0),
    (("check", "component", MODES, "--name", "lazy"), 1),
    (("check", "system", EX, "--names", "control,monitor"), 0),
    (("check", "system", INC, "--names", "producer,consumer"), 1),
    (("canonicalize", EX, "--contract", "C2"), 0),
    (("oracle", "verify", EX), 0),
    (("oracle", "verify", "--random", "3", "--seed", "4"), 0),
])
def test_exit_codes_pass_and_fail(argv, expected):
    assert run(*argv)[0] == expected


@pytest.mark.parametrize("argv", [
    (),
    ("check",),
    ("check", "dom", EX),
    ("check", "dom", EX, "--left", "C1", "--right", "C2", "--format", "xml"),
    ("frobnicate", EX),
    ("check", "dom", "missing.hrc", "--left", "C", "--right", "C"),
    ("oracle", "verify"),
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_semantic_errors_exit_3(tmp_path):
    bad = tmp_path / "bad.hrc"
    bad.write_text("ports { a: bool }\ncontract K { assume a &&; promise a; }\n")
    code, _, err = run("canonicalize", str(bad), "--contract", "K")
    assert code == 3 and "2:" in err
    assert run("op", "meet", EX, "--left", "Cnom", "--right", "Nope")[0] == 3
    assert run("op", "eliminate", EX, "--contract", "C1", "--ports", "zz")[0] == 3
    assert run("check", "sat", EX, "--impl", "nothing", "--contract", "C1")[0] == 3
    code, _, err = run("canonicalize", EX, "--contract", "Cnom", "--max-universe", "8")
    assert code == 3 and "universe too large" in err


@pytest.mark.parametrize("value", ["0", "-3", "lots"])
def test_bad_universe_cap_is_usage(value):
    code, _, err = run("canonicalize", EX, "--contract", "Cnom", "--max-universe", value)
    assert code == 2 and "--max-universe" in err


def test_huge_universe_is_a_cap_error(tmp_path):
    ports = "; ".join(f"p{i}: bool" for i in range(30))
    big = tmp_path / "big.hrc"
    big.write_text("ports { %s }\ncontract K { assume %s; promise true; }\n"
                   % (ports, " && ".join(f"p{i}" for i in range(30))))
    code, _, err = run("oracle", "verify", str(big))
    assert code == 3 and "exceeds cap" in err
    assert run("canonicalize", str(big), "--contract", "K")[0] == 3


def test_empty_spec_verifies(tmp_path):
    empty = tmp_path / "empty.hrc"
    empty.write_text("")
    code, out, _ = run("oracle", "verify", str(empty), "--format", "json")
    assert code == 0
    assert json.loads(out)["diagnostics"] == []


def test_json_schema():
    code, out, _ = run("check", "compatible", INC, "--contract", "Picky", "--format", "json")
    doc = json.loads(out)
    assert set(doc) == {"command", "verdict", "contract", "diagnostics"}
    assert doc["verdict"] is False
    assert doc["contract"]["assume"] == [{"o": [True]}]
    assert doc["diagnostics"][0]["witness"] == {"o": [False]}
    code, out, _ = run("check", "dom", EX, "--left", "C1", "--right", "C1", "--format", "json")
    doc = json.loads(out)
    assert doc["contract"] is None and doc["diagnostics"][0]["witness"] is None


CHECKS = [
    ("check", "sat", EX, "--impl", "unit", "--contract", "Cexc"),
    ("check", "dom", EX, "--left", "C1", "--right", "Cnom"),
    ("check", "compatible", INC, "--contract", "Picky"),
    ("check", "component", MODES, "--name", "arbiter"),
    ("check", "system", INC, "--names", "producer,consumer"),
    ("oracle", "verify", MODES),
]


@pytest.mark.parametrize("argv", CHECKS)
def test_text_and_json_verdicts_agree(argv):
    code_t, text, _ = run(*argv)
    code_j, js, _ = run(*argv, "--format", "json")
    verdict = json.loads(js)["verdict"]
    assert code_t == code_j
    assert f"verdict: {str(verdict).lower()}" in text.splitlines()
    assert (code_t == 0) == verdict


@pytest.mark.parametrize("argv", CHECKS[:3] + [("op", "meet", EX, "--left", "C1", "--right", "C2")])
def test_output_is_byte_identical_across_runs(argv):
    assert run(*argv) == run(*argv)


def test_global_flags_before_the_command():
    a = run("--format", "json", "op", "meet", EX, "--left", "C1", "--right", "C2")
    b = run("op", "meet", EX, "--left", "C1", "--right", "C2", "--format", "json")
    assert a == b and a[0] == 0


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "hrcontracts", "check", "dom", EX,
                        "--left", "Cnom", "--right", "Cnom"], capture_output=True, text=True)
    assert p.returncode == 0
    assert p.stdout.splitlines()[1] == "verdict: true"
