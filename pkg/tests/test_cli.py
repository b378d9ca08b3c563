import csv
import subprocess
import sys

from conftest import fixture_path
from trapgraph.cli import main, read_diagram_file


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def record_fields(line):
    return dict(tok.split("=", 1) for tok in line.split())


def test_gen_is_deterministic(tmp_path, capsys):
    p1, p2 = tmp_path / "a.txt", tmp_path / "b.txt"
    assert main(["gen", "8", "--seed", "42", "--out", str(p1)]) == 0
    assert main(["gen", "8", "--seed", "42", "--out", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_gen_n1(capsys):
    code, out, _ = run_cli(capsys, "gen", "1")
    assert code == 0
    assert out.split() == ["1", "1", "2", "1", "2"]


def test_gen_unwritable_path(capsys):
    code, _, err = run_cli(capsys, "gen", "4", "--out", "/nonexistent/dir/x.txt")
    assert code == 1
    assert "error" in err


def test_generated_files_are_accepted_everywhere(tmp_path, capsys):
    path = tmp_path / "d.txt"
    assert main(["gen", "40", "--seed", "3", "--out", str(path)]) == 0
    for argv in (
        ["kappa", str(path)],
        ["kappa", str(path), "--algorithm", "quadratic"],
        ["kappa", str(path), "--algorithm", "oracle"],
        ["check", str(path), "--property", "bipartite"],
        ["check", str(path), "--property", "triangle"],
        ["check", str(path), "--property", "caterpillar"],
        ["export", str(path)],
        ["export", str(path), "--format", "dot"],
    ):
        code, out, err = run_cli(capsys, *argv)
        assert code == 0, (argv, err)
        assert out


def test_kappa_record_identical_across_algorithms(tmp_path, capsys):
    path = tmp_path / "d.txt"
    main(["gen", "30", "--seed", "11", "--out", str(path)])
    kappas = set()
    for algorithm in ("fast", "quadratic", "oracle"):
        code, out, _ = run_cli(capsys, "kappa", str(path), "--algorithm", algorithm)
        assert code == 0
        rec = record_fields(out.strip())
        assert rec["algorithm"] == algorithm
        assert int(rec["elapsed_ns"]) >= 0
        kappas.add(int(rec["kappa"]))
    assert len(kappas) == 1


def test_kappa_canonical_fixture(capsys):
    for algorithm in ("fast", "quadratic", "oracle"):
        code, out, _ = run_cli(
            capsys, "kappa", fixture_path("n8_kappa2.txt"), "--algorithm", algorithm
        )
        assert code == 0
        assert record_fields(out.strip())["kappa"] == "2"


def test_kappa_witness(tmp_path, capsys):
    path = tmp_path / "d.txt"
    main(["gen", "25", "--seed", "7", "--out", str(path)])
    dg = read_diagram_file(str(path))
    for algorithm in ("fast", "quadratic", "oracle"):
        code, out, _ = run_cli(
            capsys, "kappa", str(path), "--witness", "--algorithm", algorithm
        )
        assert code == 0
        rec = record_fields(out.strip())
        if rec["witness"] != "-":
            witness = [int(v) for v in rec["witness"].split(",")]
            assert len(witness) == int(rec["kappa"])
            assert all(1 <= v <= dg.n for v in witness)


def test_oracle_refuses_large_inputs(tmp_path, capsys):
    path = tmp_path / "big.txt"
    main(["gen", "501", "--out", str(path)])
    code, _, err = run_cli(capsys, "kappa", str(path), "--algorithm", "oracle")
    assert code == 1
    assert "n <= 500" in err


def test_invalid_diagram_reports_violations(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n1 2 1 2\n2 4 3 4\n")  # duplicate label 2 on the upper line
    code, _, err = run_cli(capsys, "kappa", str(bad))
    assert code == 1
    assert "duplicate label 2 on upper line" in err


def test_parse_failures(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing\n")
    assert run_cli(capsys, "kappa", str(empty))[0] == 1

    short = tmp_path / "short.txt"
    short.write_text("3\n1 2 1 2\n")
    code, _, err = run_cli(capsys, "kappa", str(short))
    assert code == 1
    assert "expected" in err

    missing = tmp_path / "missing.txt"
    assert run_cli(capsys, "kappa", str(missing))[0] == 1


def test_normalize_flag(tmp_path, capsys):
    raw = tmp_path / "raw.txt"
    raw.write_text("2\n10 40 10 40\n20 50 20 50\n")
    assert run_cli(capsys, "kappa", str(raw))[0] == 1  # labels not 1..2n
    code, out, _ = run_cli(capsys, "kappa", str(raw), "--normalize")
    assert code == 0
    assert record_fields(out.strip())["kappa"] == "1"


def test_check_outputs(capsys, tmp_path):
    p3 = tmp_path / "p3.txt"
    p3.write_text("3\n1 3 1 3\n2 5 2 5\n4 6 4 6\n")
    code, out, _ = run_cli(capsys, "check", str(p3), "--property", "bipartite")
    assert code == 0
    assert "bipartite=true" in out and "part0=" in out

    code, out, _ = run_cli(capsys, "check", str(p3), "--property", "triangle")
    assert "triangle=none" in out

    code, out, _ = run_cli(capsys, "check", str(p3), "--property", "caterpillar")
    assert "caterpillar=true" in out and "spine=1,2,3" in out

    k3 = tmp_path / "k3.txt"
    k3.write_text("3\n1 4 1 4\n2 5 2 5\n3 6 3 6\n")
    code, out, _ = run_cli(capsys, "check", str(k3), "--property", "triangle")
    assert "triangle=1,2,3" in out
    code, out, _ = run_cli(capsys, "check", str(k3), "--property", "bipartite")
    assert "bipartite=false" in out and "odd_cycle=" in out
    code, out, _ = run_cli(capsys, "check", str(k3), "--property", "caterpillar")
    assert "caterpillar=false" in out and "not a tree" in out


def test_export_formats(tmp_path, capsys):
    pair = tmp_path / "pair.txt"
    pair.write_text("2\n1 2 1 2\n3 4 3 4\n")
    code, out, _ = run_cli(capsys, "export", str(pair))
    assert out == "2 0\n"

    p3 = tmp_path / "p3.txt"
    p3.write_text("3\n1 3 1 3\n2 5 2 5\n4 6 4 6\n")
    code, out, _ = run_cli(capsys, "export", str(p3))
    assert out == "3 2\n1 2\n2 3\n"

    code, out, _ = run_cli(capsys, "export", str(p3), "--format", "dot")
    assert out.startswith("graph g {") and "1 -- 2;" in out and "2 -- 3;" in out


def test_bench_csv(tmp_path, capsys):
    out_path = tmp_path / "bench.csv"
    code, _, err = run_cli(
        capsys,
        "bench",
        "--sizes", "32,64",
        "--seeds-per-size", "2",
        "--algorithms", "fast,quadratic,oracle",
        "--csv-out", str(out_path),
    )
    assert code == 0, err
    with open(out_path) as handle:
        rows = list(csv.DictReader(handle))
    assert len(rows) == 2 * 2 * 3
    assert set(rows[0]) == {"n", "seed", "algorithm", "elapsed_ns", "kappa"}
    by_instance = {}
    for row in rows:
        by_instance.setdefault((row["n"], row["seed"]), set()).add(row["kappa"])
    assert all(len(kappas) == 1 for kappas in by_instance.values())


def test_bench_rejects_unknown_algorithm(capsys):
    code, _, err = run_cli(capsys, "bench", "--sizes", "8", "--algorithms", "magic")
    assert code == 1
    assert "unknown algorithm" in err


def test_gen_at_scale_round_trips(tmp_path):
    # exercises the generator/parser/validator chain on a big instance
    path = tmp_path / "big.txt"
    assert main(["gen", "100000", "--seed", "1", "--out", str(path)]) == 0
    dg = read_diagram_file(str(path))
    assert dg.n == 100_000


def test_module_entrypoint():
    proc = subprocess.run(
        [sys.executable, "-m", "trapgraph.cli", "gen", "2", "--seed", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "2"
