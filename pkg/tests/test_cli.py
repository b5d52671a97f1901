import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from monoclique.cli import figure_csv, main
from monoclique.coloring import paley_coloring, random_coloring, read_coloring, write_coloring


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_paley_then_census(tmp_path, capsys):
    f = tmp_path / "p17.txt"
    assert run(["gen", "--family", "paley", "--q", "17", "--out", str(f)], capsys)[:2] == (0, "")
    assert read_coloring(f.read_text()) == paley_coloring(17)
    code, out, _ = run(["census", "--in", str(f)], capsys)
    prof = json.loads(out)
    assert code == 0 and prof["red"][3] == prof["blue"][3] == "68"
    assert prof["max_size"] == 3


def test_gen_to_stdout_round_trips(capsys):
    code, out, _ = run(["gen", "--family", "random", "--n", "9", "--seed", "4"], capsys)
    assert code == 0 and out == write_coloring(random_coloring(9, 4))


@pytest.mark.parametrize("argv,n", [
    (["--family", "cycle", "--n", "7"], 7),
    (["--family", "clique_union", "--t", "3", "--s", "2"], 6),
    (["--family", "join", "--n", "4", "--t", "2", "--s", "2", "--cross", "R"], 8),
])
def test_gen_families(argv, n, capsys):
    code, out, _ = run(["gen"] + argv, capsys)
    assert code == 0 and read_coloring(out).n == n


def test_census_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("3\nRR\nR\n"))
    code, out, _ = run(["census", "--in", "-"], capsys)
    assert code == 0 and json.loads(out)["red"] == ["0", "3", "3", "1"]


def test_census_conventions(tmp_path, capsys):
    f = tmp_path / "c5.txt"
    run(["gen", "--family", "cycle", "--n", "5", "--out", str(f)], capsys)
    out = json.loads(run(["census", "--in", str(f), "--convention", "blue_only", "--include-empty"], capsys)[1])
    assert out["blue"][:2] == ["1", "5"] and out["red"][:2] == ["0", "0"]
    out = json.loads(run(["census", "--in", str(f), "--per-vertex"], capsys)[1])
    assert out["per_vertex"] == ["6"] * 5


def test_tree_reports(tmp_path, capsys):
    f = tmp_path / "c5.txt"
    run(["gen", "--family", "cycle", "--n", "5", "--out", str(f)], capsys)
    code, out, _ = run(["tree", "--in", str(f), "--kind", "grt", "--max-level", "2"], capsys)
    assert code == 0 and out == "level,node_count\n0,5\n1,20\n2,20\n"
    code, out, _ = run(["tree", "--in", str(f), "--kind", "rrt", "--bias-schedule", "0:0.5,1:0.4"], capsys)
    assert code == 0 and out.splitlines()[0] == "level,color,q,bag_size,node_count"
    # q is the realized ratio: the bias for a red level, one minus it for a blue one
    color, q = out.splitlines()[2].split(",")[1:3]
    assert q == {"R": "2/5", "B": "3/5"}[color]


def test_tree_paths_and_aux(tmp_path, capsys):
    f = tmp_path / "r4.txt"
    run(["gen", "--family", "random", "--n", "4", "--seed", "1", "--out", str(f)], capsys)
    code, out, _ = run(["tree", "--in", str(f), "--kind", "paths"], capsys)
    assert code == 0 and len(out.splitlines()) == 8
    code, out, _ = run(["tree", "--in", str(f), "--kind", "aux"], capsys)
    assert code == 0 and json.loads(out)["paths"] == 8


@pytest.mark.parametrize("argv,value,mode", [
    (["--formula", "g", "--c", "0"], "0", "exact"),
    (["--formula", "g2", "--c", "1"], "1/2", "exact"),
    (["--formula", "szekely_product", "--t", "4", "--k", "3"], "800/3", "exact"),
    (["--formula", "ramsey_binomial", "--s", "3", "--t", "3"], "6", "exact"),
    (["--formula", "erdos_ct_lower", "--t", "4", "--R", "18"], "1/3060", "exact"),
    (["--formula", "cor_lower", "--n", "64", "--k", "3"], "651/4", "exact"),
    (["--formula", "subset_sum_closed", "--t", "3", "--N", "10"], "8/21", "exact"),
    (["--formula", "floor_t_over_sqrt2", "--t", "10"], "7", "exact"),
    (["--formula", "binom_shift", "--n", "5", "--k", "2", "--t", "3"], "true", "exact"),
    (["--formula", "ln_estimate2", "--x", "0.68"], "true", "exact"),
])
def test_bounds(argv, value, mode, capsys):
    code, out, _ = run(["bounds"] + argv, capsys)
    rep = json.loads(out)
    assert code == 0 and rep["value"] == value and rep["mode"] == mode
    assert rep["formula"] == argv[1]


def test_bounds_approx_digits(capsys):
    rep = json.loads(run(["bounds", "--formula", "g1", "--c", "0.5"], capsys)[1])
    assert rep["mode"] == "approx" and rep["value"].startswith("0.3196631198888795")
    assert len(rep["value"]) >= 52


def test_figure(capsys):
    code, out, _ = run(["figure", "--step", "0.001"], capsys)
    rows = [r.split(",") for r in out.splitlines()]
    assert code == 0 and rows[0] == ["c", "g1", "g2"]
    data = [tuple(map(float, r)) for r in rows[1:]]
    assert len(data) == 2000
    best = max(data, key=lambda r: r[2])
    assert best[0] == 1 and best[2] == 0.5
    assert all(g1 == 0 for c, g1, _ in data if c > 0.5)


def test_figure_csv_coarse():
    assert figure_csv(Fraction(1, 2)).splitlines()[1:] == [
        "0,0,0", "0.5,0.31966311988888,0.375", "1,0,0.5", "1.5,0,0.375"]


def test_check_suite(capsys):
    code, out, _ = run(["check", "--suite", "c5"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and "wall_time" not in rep
    code, out, _ = run(["check", "--suite", "c5", "--timing", "--pretty"], capsys)
    assert code == 0 and out.startswith("c5: PASS") and "wall time" in out


@pytest.mark.parametrize("argv", [
    ["census"],
    ["gen", "--family", "random"],
    ["gen", "--family", "moebius", "--n", "4"],
    ["bounds", "--formula", "szekely_product", "--t", "2", "--k", "2"],
    ["bounds", "--formula", "g", "--c", "3"],
    ["tree", "--in", "/nonexistent", "--kind", "grt"],
    ["check", "--suite", "nope"],
    ["figure", "--step", "0"],
    ["census", "--in", "-", "--unknown-flag"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_bad_file_reports_line(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("3\nRX\nB\n")
    code, _, err = run(["census", "--in", str(f)], capsys)
    assert code == 2 and "line 2" in err


def test_check_failure_exit_1(monkeypatch, capsys):
    from monoclique import verify

    def failing(seeds=None, workers=1):
        rep = verify.SuiteReport("c5", instances=1)
        rep.failures.append(verify.Failure("x", "", "c", "w", "1", "<", "0"))
        return rep

    monkeypatch.setitem(verify.SUITES, "c5", failing)
    assert main(["check", "--suite", "c5"]) == 1


def test_out_writes_file_not_stdout(tmp_path, capsys):
    f = tmp_path / "fig.csv"
    code, out, _ = run(["figure", "--step", "0.5", "--out", str(f)], capsys)
    assert code == 0 and out == "" and f.read_text().startswith("c,g1,g2\n")


def test_console_entry_point_is_deterministic(tmp_path):
    cmd = [sys.executable, "-m", "monoclique", "gen", "--family", "random", "--n", "12", "--seed", "9"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and read_coloring(a.decode()) == random_coloring(12, 9)
