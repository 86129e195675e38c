"""CLI behavior through main(), without spawning subprocesses."""

import csv

import pytest

from nearconv.cli import main
from nearconv.formats import format_instance, parse_sequence
from nearconv.generators import knapsack_instance
from nearconv.seq import naive_maxplus, naive_minplus


@pytest.fixture
def inst_file(tmp_path):
    path = tmp_path / "inst.txt"
    path.write_text("3 6\n3 2\n4 3\n5 4\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_default(capsys, inst_file):
    code, out, err = run(capsys, "solve", inst_file)
    assert code == 0 and err == ""
    assert out == "OPT 8\n"


def test_solve_with_items(capsys, inst_file):
    code, out, _ = run(capsys, "solve", "--algo", "bellman", "--items", inst_file)
    assert code == 0
    assert out == "OPT 8\nITEMS 1 3\n"


@pytest.mark.parametrize("algo", ["bellman", "fast", "symmetric", "auto"])
def test_solve_algos_agree(capsys, tmp_path, algo):
    inst = knapsack_instance(99, 60, 20, 20)
    path = tmp_path / "big.txt"
    path.write_text(format_instance(inst))
    code, out, _ = run(capsys, "solve", "--algo", algo, str(path))
    assert code == 0
    assert out == "OPT 587\n"


def test_solve_seed_determinism(capsys, tmp_path):
    inst = knapsack_instance(7, 150, 40, 40)
    path = tmp_path / "inst.txt"
    path.write_text(format_instance(inst))
    outs = set()
    for _ in range(2):
        code, out, _ = run(
            capsys, "solve", "--algo", "fast", "--seed", "5", "--items", str(path)
        )
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_solve_malformed_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 10\n3 xx\n4 3\n")
    code, out, err = run(capsys, "solve", str(path))
    assert code == 2 and out == ""
    assert err.startswith("error: line 2:")


def test_solve_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "solve", str(tmp_path / "nope.txt"))
    assert code == 2
    assert err.startswith("error:")


def test_convolve_modes(capsys, tmp_path):
    fa = tmp_path / "f.txt"
    ga = tmp_path / "g.txt"
    fa.write_text("2 0\n0 1\n")
    ga.write_text("2 0\n0 2\n")
    code, out, _ = run(capsys, "convolve", "--mode", "min", str(fa), str(ga))
    assert code == 0
    assert out == "3 0\n0 1 3\n"
    code, out, _ = run(capsys, "convolve", "--mode", "max", str(fa), str(ga))
    assert code == 0
    assert out == "3 0\n0 2 3\n"


def test_convolve_matches_library(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "seq", "--seed", "3", "--len", "40",
                       "--delta", "2")
    f = parse_sequence(out)
    code, out, _ = run(capsys, "gen", "seq", "--seed", "4", "--len", "30",
                       "--delta", "2")
    g = parse_sequence(out)
    fa = tmp_path / "f.txt"
    ga = tmp_path / "g.txt"
    fa.write_text("40 0\n" + " ".join(map(str, f.values)) + "\n")
    ga.write_text("30 0\n" + " ".join(map(str, g.values)) + "\n")
    code, out, _ = run(capsys, "convolve", "--mode", "min", str(fa), str(ga))
    assert parse_sequence(out) == naive_minplus(f, g)
    code, out, _ = run(capsys, "convolve", "--mode", "max", str(fa), str(ga))
    assert parse_sequence(out) == naive_maxplus(f, g)


def test_gen_instance_deterministic(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "gen", "instance", "--seed", "11", "--n", "8",
                           "--pmax", "5", "--wmax", "5")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    assert outs[0].splitlines()[0].startswith("8 ")


def test_gen_instance_capacity_override(capsys):
    code, out, _ = run(capsys, "gen", "instance", "--seed", "11", "--n", "3",
                       "--pmax", "5", "--wmax", "5", "--capacity", "7")
    assert out.splitlines()[0] == "3 7"


def test_gen_seq_solvable_roundtrip(capsys):
    code, out, _ = run(capsys, "gen", "seq", "--seed", "9", "--len", "12",
                       "--delta", "0", "--slope", "10")
    assert code == 0
    seq = parse_sequence(out)
    assert len(seq) == 12


def test_gen_bad_params_exit_2(capsys):
    code, _, err = run(capsys, "gen", "seq", "--seed", "9", "--len", "0",
                       "--delta", "0")
    assert code == 2 and err.startswith("error:")


def test_verify_smoke(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "2", "--seed", "1234")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "all criteria passed"
    crit = [l for l in lines if l.startswith("criterion")]
    assert len(crit) == 10
    assert all(" PASS " in l for l in crit)


def test_bench_writes_csv(capsys, tmp_path):
    out_path = tmp_path / "rows.csv"
    code, out, _ = run(
        capsys, "bench",
        "--sweep", "n=32:64,wmax=8,pmax=8,seeds=2,algos=bellman:fast",
        "--out", str(out_path),
    )
    assert code == 0
    with open(out_path) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 8  # 2 sizes x 2 seeds x 2 algos
    assert set(rows[0]) == {
        "algo", "n", "wmax", "pmax", "W", "seed", "value", "wall_time_ns"
    }
    for row in rows:
        assert row["algo"] in ("bellman", "fast")
        assert int(row["wall_time_ns"]) > 0
    # same (n, seed) rows must agree on the optimum across algos
    by_key = {}
    for row in rows:
        by_key.setdefault((row["n"], row["seed"]), set()).add(row["value"])
    assert all(len(v) == 1 for v in by_key.values())


def test_bench_bad_sweep_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "bench", "--sweep", "algos=quantum",
                       "--out", str(tmp_path / "x.csv"))
    assert code == 2 and err.startswith("error:")
