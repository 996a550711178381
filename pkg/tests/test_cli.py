import json
import subprocess
import sys

import pytest

from earring.cli import run


def cli(*argv: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "earring", *argv], capture_output=True, text=True
    )


def test_reduce_prints_empty_word_as_e(capsys):
    assert run(["reduce", "1 -1"]) == 0
    assert capsys.readouterr().out == "e\n"


def test_reduce_nontrivial(capsys):
    assert run(["reduce", "1 2 -2 3"]) == 0
    assert capsys.readouterr().out == "1 3\n"


def test_parse_error_exits_2(capsys):
    assert run(["reduce", "1 0 2"]) == 2
    err = capsys.readouterr().err
    assert "token 2" in err


def test_project_level(capsys):
    assert run(["project", "1 3 2 -3", "--level", "2"]) == 0
    assert capsys.readouterr().out == "1 2\n"


def test_coherent_tower_default_depth(capsys):
    assert run(["coherent", "1 3"]) == 0
    assert json.loads(capsys.readouterr().out) == ["1", "1", "1 3"]


def test_coherent_tower_depth_override(capsys):
    assert run(["coherent", "1 3", "--depth", "5"]) == 0
    assert json.loads(capsys.readouterr().out) == ["1", "1", "1 3", "1 3", "1 3"]


def test_osc_counts_alternations(capsys):
    assert run(["osc", "1 3 -1 -3 1 3 -1 -3", "--gen", "1"]) == 0
    assert capsys.readouterr().out == "4\n"


def test_osc_witness_json(capsys):
    assert run(["osc", "1 -1", "--gen", "1", "--witness"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "2"
    assert json.loads(lines[1])["times"] == ["0", "1/4", "1/2", "3/4", "1"]


def test_dist_between_loop_and_constant(capsys):
    assert run(["dist", "5", ".", "--eps", "1e-4"]) == 0
    assert capsys.readouterr().out == "0.400000\n"


def test_compile_lists_moves(capsys):
    assert run(["compile", "1 . -2"]) == 0
    assert capsys.readouterr().out == (
        "traverse 1 +1 1/3\ndwell 1/3\ntraverse 2 -1 1/3\n"
    )


def test_compile_empty_loop_is_usage_error(capsys):
    assert run(["compile", "e"]) == 2
    assert "constant loop" in capsys.readouterr().err


def test_report_convergence_json_monotone(capsys):
    assert run(["report", "convergence", "--n", "3", "--kmax", "64", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    ds = [float(c["values"]["d_w"]) for c in data["cells"]]
    assert all(a > b for a, b in zip(ds, ds[1:]))
    assert ds[-1] < 0.04
    assert data["verdict"] == "pass"


def test_report_failure_exit_code(capsys):
    assert run(["report", "limitpoint", "--eps", "0.2", "--max-index", "5"]) == 1
    out = capsys.readouterr().out
    assert "fail" in out


def test_report_out_file(tmp_path, capsys):
    out = tmp_path / "product.csv"
    assert run(["report", "product", "--nmax", "3", "--kmax", "3", "--format", "csv", "--out", str(out)]) == 0
    capsys.readouterr()
    lines = out.read_text(encoding="utf-8").strip().splitlines()
    assert lines[0] == "n,k,reduced_len,expected_len,nonempty,pass"
    assert len(lines) == 5


def test_report_figures(tmp_path, capsys):
    figdir = tmp_path / "figs"
    assert (
        run(
            [
                "report", "oscbounds", "--nmax", "3", "--kmax", "3", "--trials", "2",
                "--format", "csv", "--out", str(tmp_path / "osc.csv"), "--figures", str(figdir),
            ]
        )
        == 0
    )
    capsys.readouterr()
    png = figdir / "oscillation_bounds.png"
    assert png.exists() and png.stat().st_size > 0


@pytest.mark.parametrize(
    "argv",
    [
        ["report", "oscbounds", "--nmax", "4", "--kmax", "4", "--trials", "5", "--seed", "7", "--format", "json"],
        ["report", "oscbounds", "--nmax", "3", "--kmax", "5", "--trials", "3", "--seed", "1", "--format", "csv"],
        ["report", "product", "--nmax", "5", "--kmax", "4", "--format", "json"],
    ],
)
def test_report_runs_are_byte_identical(argv):
    first = cli(*argv)
    second = cli(*argv)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.encode() == second.stdout.encode()


def test_usage_error_exit_code():
    proc = cli("report", "convergence", "--format", "yaml")
    assert proc.returncode == 2
