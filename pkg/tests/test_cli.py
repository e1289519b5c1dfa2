import json
import subprocess
import sys

import pytest

from locdom.cli import main
from locdom.graph import read_edge_list
from locdom.graph6 import decode_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lambda_family(capsys):
    code, out, _ = run(capsys, "lambda", "--family", "path", "--n", "7")
    assert code == 0
    assert out.splitlines() == ["lambda=3 witness=0,3,5", "lambda_complement=3 witness=0,2,4"]


def test_lambda_graph6_and_file(capsys, tmp_path):
    # DhC is P_5, where the graph and its complement both need two vertices
    code, out, _ = run(capsys, "lambda", "DhC")
    assert code == 0
    assert out.splitlines()[0] == "lambda=2 witness=1,3"
    g = decode_graph6("DhC")
    p = tmp_path / "g.txt"
    p.write_text(f"{g.n} {g.num_edges}\n" + "".join(f"{u} {v}\n" for u, v in g.edges()))
    code2, out2, _ = run(capsys, "lambda", str(p))
    assert code2 == 0 and out2 == out


def test_global(capsys):
    code, out, _ = run(capsys, "global", "--family", "bistar", "--r", "3", "--s", "3")
    assert code == 0
    assert out.startswith("lambda_g=4 ")
    assert "lambda=4 lambda_complement=3" in out


def test_family_and_construct(capsys):
    code, out, _ = run(capsys, "family", "cycle", "7")
    assert (code, out) == (0, "FhCKG\n")
    code, out, _ = run(capsys, "construct", "--r", "4", "--s", "7", "--format", "edgelist")
    assert code == 0
    lines = out.splitlines()
    g = read_edge_list([ln for ln in lines if not ln.startswith("#")])
    assert g.n == 11
    assert "# certified lambda=4 lambda_complement=5" in lines


def test_construct_bistar_certified(capsys):
    code, out, _ = run(capsys, "construct", "--r", "3", "--s", "4", "--kind", "bistar", "--certify")
    assert code == 0
    assert "lambda=5 lambda_complement=4" in out


def test_assoc_dot(capsys):
    code, out, _ = run(capsys, "assoc", "--family", "path", "--n", "4", "--set", "1,2", "--dot", "-")
    assert code == 0
    assert '0 -- "z" [label=1];' in out
    assert "properties=ok" in out


def test_verify_json(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "difuno", "--n-max", "5", "--format", "json", "--output", str(path))
    assert code == 0
    assert out.startswith("PASS difuno")
    d = json.loads(path.read_text())
    assert d["schema"] == 1 and d["reports"][0]["checked"] == 1 + 1 + 2 + 6 + 21


def test_verify_graph6_stream(capsys, tmp_path):
    stream = tmp_path / "gs.g6"
    stream.write_text("A_\nBw\nCF\n")
    code, out, _ = run(capsys, "verify", "global-symmetry", "--graph6", str(stream))
    assert code == 0 and "3 checked" in out


def test_report_converts_json_to_csv(capsys, tmp_path):
    path = tmp_path / "r.json"
    run(capsys, "verify", "cactus", "--samples", "30", "--format", "json", "--output", str(path))
    code, out, _ = run(capsys, "report", str(path), "--format", "csv")
    assert code == 0
    assert out.splitlines()[0].startswith("schema,suite")
    assert out.splitlines()[1].startswith("1,cactus")


@pytest.mark.parametrize(
    "argv",
    [
        ["lambda", "--bogus"],
        ["lambda"],
        ["lambda", "A_ x"],
        ["construct", "--r", "3", "--s", "5"],
        ["family", "cycle", "2"],
        ["family", "bistar", "3"],
        ["verify", "nope"],
        ["assoc", "--family", "path", "--n", "4", "--set", "0,1"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "locdom", "family", "path", "3"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "Bg\n"
