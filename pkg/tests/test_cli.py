import json
import subprocess
import sys
from pathlib import Path

import pytest

from grassmann_semi import cli
from grassmann_semi.exterior import MultiVector

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = [
    ("eigenpairs_swap.jsonl", ["eigenpairs", "--matrix", "[[0,1],[1,0]]", "--json"]),
    ("check_ch_maxplus.jsonl", ["check-ch", "--semiring", "maxplus", "--n", "3", "--trials", "3", "--seed", "11", "--json"]),
    ("demo.txt", ["demo"]),
    ("leibniz_bool.txt", ["check-leibniz", "--semiring", "bool", "--n", "3", "--trials", "5", "--seed", "2"]),
    ("qi_int.jsonl", ["check-quasi-inverse", "--n", "3", "--trials", "3", "--seed", "5", "--json"]),
]


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden_outputs(name, argv, capsys, monkeypatch):
    monkeypatch.delenv("GRASSMANN_SEED", raising=False)
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_swap_eigenpairs_values(capsys):
    code, out, _ = run(["eigenpairs", "--matrix", "[[0,1],[1,0]]", "--json"], capsys)
    report = json.loads(out)
    assert code == 0
    assert report["instance"]["e"] == [[1, 0], [0, 0], [0, 1]]
    assert report["instance"]["h"] == [[1, 0], [0, 0], [2, 1]]
    assert set(report) == {"theorem", "instance", "holds", "residual", "trunc", "seed"}


def test_demo_prints_worked_example(capsys):
    code, out, _ = run(["demo"], capsys)
    assert code == 0
    assert "b3^b2 + b2^b3 + b1^b4" in out
    assert "(1, 0)*b1^b4 + (1, 1)*b2^b3" in out


@pytest.mark.parametrize("semiring,zero", [("int", 0), ("rat", 0), ("nat", 0), ("bool", "false"), ("maxplus", '"-inf"')])
def test_check_ch_zero_matrix(semiring, zero, capsys):
    matrix = f"[[{zero},{zero},{zero}],[{zero},{zero},{zero}],[{zero},{zero},{zero}]]"
    code, out, _ = run(["check-ch", "--semiring", semiring, "--matrix", matrix], capsys)
    assert code == 0
    assert out.strip().endswith("(seed 0, trunc 6)")


@pytest.mark.parametrize("sub", ["eigenpairs", "check-ch", "check-quasi-inverse", "check-prech", "check-leibniz"])
@pytest.mark.parametrize("semiring", ["int", "nat", "bool", "maxplus"])
def test_random_runs_hold(sub, semiring, capsys):
    code, out, _ = run([sub, "--semiring", semiring, "--n", "3", "--trials", "4", "--seed", "123"], capsys)
    assert code == 0, out


def test_json_one_object_per_line(capsys):
    code, out, _ = run(["check-prech", "--n", "4", "--trials", "6", "--json"], capsys)
    lines = out.splitlines()
    assert code == 0 and len(lines) == 6
    for i, line in enumerate(lines):
        report = json.loads(line)
        assert report["instance"]["trial"] == i and report["holds"] is True
        assert report["trunc"] == 8


def test_seed_determinism_and_env_fallback(capsys, monkeypatch):
    argv = ["check-leibniz", "--semiring", "maxplus", "--n", "4", "--trials", "5", "--json"]
    _, a, _ = run(argv + ["--seed", "77"], capsys)
    _, b, _ = run(argv + ["--seed", "77"], capsys)
    monkeypatch.setenv("GRASSMANN_SEED", "77")
    _, c, _ = run(argv, capsys)
    _, d, _ = run(argv + ["--seed", "78"], capsys)
    assert a == b == c
    assert a != d


def test_trials_are_independent_of_count(capsys):
    _, short, _ = run(["check-quasi-inverse", "--trials", "2", "--seed", "9", "--json"], capsys)
    _, long, _ = run(["check-quasi-inverse", "--trials", "4", "--seed", "9", "--json"], capsys)
    assert long.splitlines()[:2] == short.splitlines()


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["eigenpairs", "--matrix", "[[1,2],[3]]"], "row 2"),
        (["eigenpairs", "--matrix", '[[1,"-inf"],[0,1]]'], "row 1, column 2"),
        (["eigenpairs", "--semiring", "bool", "--matrix", "1,0\n0,7"], "line 2, column 2"),
        (["eigenpairs", "--matrix", "[[1,0],[0,1]]", "--n", "3"], "expected 3 rows"),
        (["check-ch", "--n", "9"], "--n"),
        (["check-ch", "--n", "3", "--trunc", "2"], "--trunc"),
        (["check-ch", "--trials", "0"], "--trials"),
        (["check-prech", "--n", "2"], "n >= 3"),
        (["check-quasi-inverse", "--n", "3", "--trunc", "4"], "--trunc"),
    ],
)
def test_input_errors_exit_2(argv, needle, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert needle in err


def test_bad_env_seed_exit_2(capsys, monkeypatch):
    monkeypatch.setenv("GRASSMANN_SEED", "twelve")
    code, _, err = run(["check-ch"], capsys)
    assert code == 2 and "GRASSMANN_SEED" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["check-ch", "--semiring", "minplus"])
    assert exc.value.code == 2


def test_violation_exit_1_serializes_instance(capsys, monkeypatch):
    # force a falsifying verdict to exercise the reporting path
    def broken(f, u, v):
        return False, MultiVector.top(f.n, f.domain)

    monkeypatch.setattr(cli, "check_cayley_hamilton", broken)
    code, out, _ = run(["check-ch", "--n", "2", "--trials", "1", "--seed", "4"], capsys)
    assert code == 1
    line = next(l for l in out.splitlines() if l.startswith("falsifying instance: "))
    instance = json.loads(line[len("falsifying instance: "):])
    assert instance["trial"] == 0 and instance["u"] == [0] and instance["v"] == [1]
    assert instance["endomorphism"]["n"] == 2

    code, out, _ = run(["check-ch", "--n", "2", "--trials", "1", "--seed", "4", "--json"], capsys)
    reports = [json.loads(l) for l in out.splitlines()]
    assert code == 1
    assert [r["holds"] for r in reports] == [True, False, True]


def test_large_n_warns(capsys):
    code, _, err = run(["check-leibniz", "--n", "6", "--trials", "1"], capsys)
    assert code == 0 and "warning" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "grassmann_semi", "eigenpairs", "--matrix", "[[0,1],[1,0]]", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "eigenpairs_swap.jsonl").read_text()
