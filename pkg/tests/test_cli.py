import subprocess
import sys

import pytest

from mcalp.cli import run
from mcalp.core import subsets


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


@pytest.fixture
def example(write):
    return write("example.mca", "1 {p, q} :- not 1 {q}.\n")


def test_models_stable(example, capsys):
    assert run(["models", example, "--semantics", "stable"]) == 0
    assert capsys.readouterr().out == "{p}\n"


def test_models_classical_order(example, capsys):
    assert run(["models", example, "--semantics", "classical"]) == 0
    assert capsys.readouterr().out == "{p}\n{q}\n{p, q}\n"
    assert run(["models", example, "--semantics", "classical", "--limit", "1"]) == 0
    assert capsys.readouterr().out == "{p}\n"


def test_check(example, capsys):
    assert run(["check", example, "--model", "q", "--semantics", "supported"]) == 1
    assert run(["check", example, "--model", "p", "--semantics", "supported"]) == 0
    assert run(["check", example, "--model", "p", "--semantics", "stable", "--witness"]) == 0
    out = capsys.readouterr().out
    assert out.endswith("apply 1 {p, q} :- not 1 {q}. take {p} -> {p}\n")


def test_translate_lp(write, capsys):
    prog = write("prog.lp", "c :- a, not b.\n")
    assert run(["translate", prog, "--to", "mca"]) == 0
    assert capsys.readouterr().out == "1 {c} :- 1 {a}, not 1 {b}.\n"
    assert run(["translate", prog, "--to", "ca"]) == 0
    assert capsys.readouterr().out == "1 {c} :- 1 {a}, {b} 0.\n"


def test_translate_ca(write, capsys):
    prog = write("prog.ca", "1 {a, b} 1.\n")
    assert run(["translate", prog, "--to", "mca"]) == 0
    assert capsys.readouterr().out == "1 {a, b}.\n:- 2 {a, b}.\n"


def test_compute(write, capsys):
    prog = write("horn.mca", "1 {a}.\n1 {b} :- 1 {a}.\n")
    assert run(["compute", prog, "--greedy"]) == 0
    assert capsys.readouterr().out == "X0 = {}\nX1 = {a}\nX2 = {a, b}\nresult = {a, b}\n"
    assert run(["compute", prog, "--canonical", "a,b"]) == 0
    assert capsys.readouterr().out.endswith("result = {a, b}\n")
    assert run(["compute", prog, "--canonical", "a"]) == 4


def test_compute_rejects_non_horn(example):
    assert run(["compute", example]) == 4


def test_possible_and_derivable(write, capsys):
    prog = write("d.dlp", "p | q.\n")
    assert run(["models", prog, "--semantics", "possible"]) == 0
    assert capsys.readouterr().out == "{p}\n{q}\n{p, q}\n"
    assert run(["models", prog, "--semantics", "derivable"]) == 4
    horn = write("h.mca", "1 {a, b}.\n")
    assert run(["models", horn, "--semantics", "derivable"]) == 0
    assert capsys.readouterr().out == "{a}\n{b}\n{a, b}\n"


def test_parse_error(write, capsys):
    prog = write("bad.mca", "1 {a}.\n2 {b}.\n")
    assert run(["models", prog]) == 2
    assert capsys.readouterr().err.startswith(f"{prog}:2:1: ")


def test_limit_exceeded(write):
    atoms = ", ".join(f"a{i}" for i in range(25))
    prog = write("big.mca", f"0 {{{atoms}}}.\n")
    assert run(["models", prog]) == 3
    assert run(["models", prog, "--semantics", "classical"]) == 3


def test_usage_errors(example):
    assert run(["models", example, "--semantics", "nonsense"]) == 4
    assert run(["models", example + ".txt"]) == 4


def test_models_agree_with_check(write, capsys):
    prog = write("p.mca", "1 {a, b} :- not 1 {c}.\n1 {c} :- not 1 {a}.\n:- 2 {a, b}.\n")
    run(["models", prog, "--semantics", "stable"])
    listed = capsys.readouterr().out.splitlines()
    qualifying = []
    for m in subsets("abc"):
        if run(["check", prog, "--model", ",".join(sorted(m)), "--semantics", "stable"]) == 0:
            qualifying.append("{" + ", ".join(sorted(m)) + "}")
    capsys.readouterr()
    assert listed == qualifying


def test_repeated_runs_are_identical(example):
    cmd = [sys.executable, "-m", "mcalp", "models", example, "--semantics", "classical"]
    outputs = {subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(3)}
    assert len(outputs) == 1
