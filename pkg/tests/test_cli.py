import json

import pytest

from lieschur.catalog import serialize, heisenberg
from lieschur.cli import FORMAT_VERSION, main
from lieschur.cli import verification
from lieschur.free_lie import free_nilpotent as real_free_nilpotent
from lieschur.lie_core import LieAlgebra


def run_machine(capsys, *argv):
    code = main(["--format", "machine", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_witt_table(capsys):
    code, record = run_machine(capsys, "witt", "2", "4")
    assert code == 0
    assert record["format"] == FORMAT_VERSION
    assert record["command"] == "witt"
    assert [row["l"] for row in record["rows"]] == [2, 1, 2, 3]
    assert [row["cumulative"] for row in record["rows"]] == [2, 3, 5, 8]


@pytest.mark.parametrize("n, values", [("1", [1, 0, 0]), ("3", [3, 3, 8])])
def test_witt_rows(capsys, n, values):
    _, record = run_machine(capsys, "witt", n, "3")
    assert [row["l"] for row in record["rows"]] == values


def test_witt_human_output(capsys):
    assert main(["witt", "2", "4"]) == 0
    out = capsys.readouterr().out
    assert "l_2(d)" in out
    assert "cumulative" in out


def test_format_flag_after_subcommand(capsys):
    assert main(["witt", "2", "2", "--format", "machine"]) == 0
    assert json.loads(capsys.readouterr().out)["inputs"] == {"n": 2, "dmax": 2}


def test_free_summary(capsys):
    assert main(["free", "2", "3"]) == 0
    assert capsys.readouterr().out.strip() == "dim 5, graded 2+1+2, class 3, generators 2"
    assert main(["free", "2", "1"]) == 0
    assert capsys.readouterr().out.strip() == "dim 2, graded 2, class 1, generators 2"


def test_free_constants(capsys):
    code, record = run_machine(capsys, "free", "2", "2", "--constants")
    assert code == 0
    assert record["constants"] == serialize(real_free_nilpotent(2, 2))
    assert "bracket 1 2 -> -1*3" in record["constants"]


@pytest.mark.parametrize("spec, expected", [("abelian:4", 6), ("free:2,2", 2), ("heisenberg:1", 2)])
def test_multiplier_builtin(capsys, spec, expected):
    assert main(["multiplier", "--builtin", spec]) == 0
    assert capsys.readouterr().out.strip() == str(expected)


def test_multiplier_from_file(capsys, tmp_path):
    path = tmp_path / "heis.txt"
    path.write_text(serialize(heisenberg(1)))
    code, record = run_machine(capsys, "multiplier", str(path), "--verbose")
    assert code == 0
    assert record["multiplier_dim"] == 2
    assert (record["nullity_d2"], record["rank_d3"], record["dim_derived"]) == (2, 0, 1)
    assert (record["class"], record["generators"]) == (2, 2)
    assert record["inputs"] == {"path": str(path)}


def test_report_reproduces_worked_examples(capsys):
    _, record = run_machine(capsys, "report", "--builtin", "free:2,2")
    report = record["report"]
    assert (report["dim"], report["bound_new"], report["bound_hardy"], report["winner"]) == (3, 3, 2, "hardy")
    _, record = run_machine(capsys, "report", "--builtin", "free:2,3")
    report = record["report"]
    assert (report["dim"], report["bound_new"], report["bound_hardy"], report["winner"]) == (5, 6, 7, "new")


def test_report_human(capsys):
    assert main(["report", "--builtin", "abelian:3"]) == 0
    out = capsys.readouterr().out
    assert "winner" in out
    assert "tie" in out


def test_machine_output_is_stable(capsys):
    first = run_machine(capsys, "report", "--builtin", "filiform:5")
    second = run_machine(capsys, "report", "--builtin", "filiform:5")
    assert first == second


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("dim 3\nbracket 1 2 -> 1*3\nbracket 1 3 -> 1*1\n")
    assert main(["multiplier", str(path)]) == 2
    assert "(1,2,3)" in capsys.readouterr().err


def test_missing_file_exit_code(capsys, tmp_path):
    assert main(["multiplier", str(tmp_path / "missing.txt")]) == 2


def test_unknown_builtin_exit_code(capsys):
    assert main(["multiplier", "--builtin", "klein:4"]) == 2


def test_not_nilpotent_exit_code(capsys, tmp_path):
    path = tmp_path / "solvable.txt"
    path.write_text("dim 2\nbracket 1 2 -> 1*2\n")
    assert main(["report", str(path)]) == 1
    assert "NotNilpotentError" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [[], ["multiplier"], ["witt", "0", "3"], ["free", "2"], ["--format", "xml", "witt", "2", "2"]])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2


def test_both_inputs_is_a_usage_error(capsys, tmp_path):
    with pytest.raises(SystemExit) as excinfo:
        main(["multiplier", str(tmp_path / "x.txt"), "--builtin", "abelian:2"])
    assert excinfo.value.code == 2


def test_guardrail_requires_force(capsys):
    assert main(["multiplier", "--builtin", "abelian:90"]) == 1
    assert "--force" in capsys.readouterr().err


def test_log_dir_receives_log_file(capsys, tmp_path):
    assert main(["--log-dir", str(tmp_path), "--log-level", "DEBUG", "multiplier", "--builtin", "heisenberg:1"]) == 0
    files = list(tmp_path.iterdir())
    assert files and all(p.suffix == ".log" for p in files)
    assert any(p.name.startswith("lieschur.cli_") for p in files)


def test_function_profiling(capsys):
    assert main(["--profile", "function", "witt", "2", "3"]) == 0
    assert "Time Taken" in capsys.readouterr().err


@pytest.mark.slow
def test_verify_passes(capsys):
    code, record = run_machine(capsys, "verify", "--max-n", "2", "--max-class", "4")
    assert code == 0
    assert record["passed"]
    names = [check["check"] for check in record["checks"]]
    assert len(names) >= 10
    assert {"oracle-equivalence", "nontriviality", "bound-soundness", "chain-complex", "round-trip"} <= set(names)


def test_verify_reports_corrupted_constants(capsys, monkeypatch):
    def corrupted(n, c):
        L = real_free_nilpotent(n, c)
        return LieAlgebra(L.dim, {}, L.labels, L.grading)

    monkeypatch.setattr(verification, "free_nilpotent", corrupted)
    code, record = run_machine(capsys, "verify", "--max-n", "2", "--max-class", "2")
    assert code == 1
    assert not record["passed"]
    failed = {check["check"] for check in record["checks"] if check["verdict"] == "fail"}
    assert "oracle-equivalence" in failed
    assert "hall-counts" not in failed


def test_non_ascii_digit_is_a_parse_error(capsys, tmp_path):
    path = tmp_path / "superscript.txt"
    path.write_text("dim ²\n", encoding="utf-8")
    assert main(["multiplier", str(path)]) == 2
    err = capsys.readouterr().err
    assert "lieschur: error:" in err
    assert "Traceback" not in err
