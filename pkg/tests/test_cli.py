import csv
import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from netvuln.cli import main

LESMIS = Path(__file__).resolve().parent.parent / "data" / "lesmis.gml"


def rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def test_generate_ring(tmp_path):
    out = tmp_path / "ring.txt"
    assert main(["generate", "--model", "ws", "--n", "10", "--k", "2", "--beta", "0", "--seed", "1", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "# n=10 m=10"
    edges = sorted(tuple(map(int, ln.split())) for ln in lines[1:])
    assert edges == sorted([(i, i + 1) for i in range(9)] + [(0, 9)])


def test_generate_uses_env_seed(tmp_path, monkeypatch, capsys):
    args = ["generate", "--model", "er", "--n", "40", "--p", "0.2"]
    monkeypatch.setenv("NETVULN_SEED", "17")
    main(args)
    from_env = capsys.readouterr().out
    main(args + ["--seed", "17"])
    assert capsys.readouterr().out == from_env
    main(args + ["--seed", "18"])
    assert capsys.readouterr().out != from_env


def test_bad_env_seed(monkeypatch, capsys):
    monkeypatch.setenv("NETVULN_SEED", "abc")
    assert main(["generate", "--model", "er", "--n", "10"]) == 1
    assert "NETVULN_SEED" in capsys.readouterr().err


def test_stats_lesmis(capsys):
    assert main(["stats", "--in", str(LESMIS), "--format", "gml"]) == 0
    stats = json.loads(capsys.readouterr().out)
    assert stats["node_count"] == 77 and stats["diameter"] == 5 and stats["radius"] == 3
    assert stats["connected_pair_count"] == 5852


def test_stats_format_from_extension(tmp_path, capsys):
    p = tmp_path / "tri.net"
    p.write_text("*Vertices 4\n*Edges\n1 2\n2 3\n1 3\n")
    assert main(["stats", "--in", str(p), "--giant"]) == 0
    stats = json.loads(capsys.readouterr().out)
    assert stats["node_count"] == 3 and stats["clustering_coefficient"] == 1


def test_attack_lesmis(tmp_path, capsys):
    out, svg = tmp_path / "out.csv", tmp_path / "out.svg"
    code = main(["attack", "--in", str(LESMIS), "--format", "gml", "--strategy", "RM,IC",
                 "--csv", str(out), "--svg", str(svg)])
    assert code == 0
    data = rows(out)
    rm = [r for r in data if r["strategy"] == "RM"]
    assert rm[0]["f"] == "0.000000" and rm[0]["lcc_size"] == "77"
    assert int(rm[-1]["lcc_size"]) <= 3
    assert {r["model_or_dataset"] for r in data} == {"lesmis"}
    ET.parse(svg)
    assert "RM: destruction f=" in capsys.readouterr().out


def test_attack_disconnected_needs_giant(tmp_path):
    p = tmp_path / "two.txt"
    p.write_text("a b\nb c\nc d\nd a\nx y\n")
    out = tmp_path / "o.csv"
    assert main(["attack", "--in", str(p), "--strategy", "RD", "--csv", str(out)]) == 1
    assert main(["attack", "--in", str(p), "--strategy", "RD", "--csv", str(out), "--giant"]) == 0
    assert rows(out)[0]["lcc_size"] == "4"


def test_sweep(tmp_path, capsys):
    out, svg = tmp_path / "s.csv", tmp_path / "s.svg"
    code = main(["sweep", "--model", "ba", "--n", "60", "--runs", "2", "--seed", "4",
                 "--strategy", "RB,ID", "--csv", str(out), "--svg", str(svg)])
    assert code == 0
    data = rows(out)
    starts = [(r["strategy"], r["seed"]) for r in data if r["iteration"] == "0"]
    assert starts == [("RB", "4"), ("RB", "5"), ("ID", "4"), ("ID", "5")]
    assert "RB: mean destruction f=" in capsys.readouterr().out


def test_sweep_failures_exit_1(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["sweep", "--model", "er", "--n", "20", "--p", "0", "--runs", "1", "--csv", str(out)]) == 1
    assert rows(out) == []


def test_csv_byte_identical(tmp_path):
    args = ["sweep", "--model", "ws", "--n", "50", "--runs", "2", "--seed", "8", "--strategy", "all"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--csv", str(a)]) == 0
    assert main(args + ["--csv", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("argv", [
    ["attack", "--in", "nope.gml", "--strategy", "RM", "--csv", "x.csv"],
    ["attack", "--in", str(LESMIS), "--strategy", "ZZ", "--csv", "x.csv"],
    ["generate", "--model", "ws", "--n", "10", "--k", "3"],
    ["generate", "--model", "xx"],
    ["stats"],
    [],
])
def test_validation_errors_exit_1(argv, tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    assert main(argv) == 1
    assert capsys.readouterr().err


def test_parse_error_exit_1(tmp_path, capsys):
    p = tmp_path / "bad.gml"
    p.write_text("graph [ node [ id 1 ]\n")
    assert main(["stats", "--in", str(p)]) == 1
    assert "error" in capsys.readouterr().err


def test_io_error_exit_2(tmp_path, capsys):
    out = tmp_path / "missing-dir" / "o.csv"
    assert main(["attack", "--in", str(LESMIS), "--strategy", "RD", "--csv", str(out)]) == 2
    assert "I/O error" in capsys.readouterr().err


def test_help_exit_0(capsys):
    assert main(["--help"]) == 0


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "netvuln", "stats", "--in", str(LESMIS)],
                          capture_output=True, text=True, cwd=tmp_path)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["edge_count"] == 254
