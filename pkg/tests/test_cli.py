import json
import subprocess
import sys

import pytest

from linefeas.cli import main
from linefeas.graph_core import Graph, Pattern, has_induced, line_graph


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_intervals_27(capsys):
    code, out, _ = run(capsys, "intervals", 27)
    assert code == 0
    assert out.split() == ["[252,252]", "[268,275]", "[286,299]", "[306,324]", "[328,350]"]


def test_intervals_small(capsys):
    code, out, _ = run(capsys, "intervals", 4)
    assert code == 0 and "all pairs feasible" in out


def test_intervals_json(capsys):
    _, out, _ = run(capsys, "intervals", 5, "--json")
    assert out.strip() == '{"n":5,"nonfeasible":[[9,9]]}'


@pytest.mark.parametrize("n,m,code,text", [
    (5, 9, 1, "[9,9]"),
    (5, 10, 0, "feasible"),
    (27, 300, 0, "feasible"),
    (27, 306, 1, "[306,324]"),
])
def test_check(capsys, n, m, code, text):
    got, out, _ = run(capsys, "check", n, m)
    assert got == code and text in out


def test_check_range_error(capsys):
    code, _, err = run(capsys, "check", 5, 11)
    assert code == 2 and "usage error" in err


def test_bad_arguments_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["check", "five", "3"])
    assert exc.value.code == 2


def test_witness_edge_list(capsys):
    code, out, err = run(capsys, "witness", 6, 0)
    assert code == 0
    g = Graph.from_edge_list(out)
    assert g.edge_count == 6 and line_graph(g).edge_count == 0
    assert json.loads(err)["recipe"] == "LOW_DELTA"


def test_witness_dot(capsys):
    code, out, _ = run(capsys, "witness", 27, 251, "--dot")
    assert code == 0 and out.startswith("graph G {") and out.count("--") == 27


def test_witness_json(capsys):
    _, out, _ = run(capsys, "witness", 27, 251, "--json")
    data = json.loads(out)
    g = Graph.from_edges(map(tuple, data["edges"]), data["vertex_count"])
    assert (data["n_line"], data["m_line"]) == (27, 251)
    assert line_graph(g).edge_count == 251


def test_witness_nonfeasible(capsys):
    code, _, err = run(capsys, "witness", 10, 34)
    assert code == 1 and "34" in err


def test_witness_to_file(capsys, tmp_path):
    target = tmp_path / "g.txt"
    code, out, _ = run(capsys, "witness", 9, 26, "-o", target)
    assert code == 0
    assert json.loads(out)["m_line"] == 26
    assert line_graph(Graph.from_edge_list(target.read_text())).edge_count == 26


def test_table(capsys):
    code, out, _ = run(capsys, "table", 30)
    rows = dict(line.split("\t") for line in out.strip().splitlines()[1:])
    assert code == 0
    assert [rows[str(n)] for n in range(1, 5)] == ["*"] * 4
    assert (rows["5"], rows["10"], rows["27"], rows["30"]) == ("9", "34", "252", "321")


@pytest.mark.parametrize("lo,hi", [(5, 14), (1, 4), (5, 5)])
def test_verify(capsys, lo, hi):
    code, out, _ = run(capsys, "verify", lo, hi, "--workers", 1)
    assert code == 0 and "all match" in out


def test_verify_json(capsys):
    _, out, _ = run(capsys, "verify", 5, 5, "--json", "--workers", 1)
    data = json.loads(out)
    assert data["match"] and data["results"][0]["nonfeasible_count"] == 1


def test_verify_limit(capsys):
    code, _, err = run(capsys, "verify", 5, 40)
    assert code == 2 and "--limit" in err


def test_fexact(capsys):
    code, out, _ = run(capsys, "fexact", 9, 7)
    assert code == 0 and out.strip() == "26"


def test_acyclic(capsys):
    code, out, _ = run(capsys, "acyclic", 10, "--json", "--workers", 1)
    data = json.loads(out)
    assert code == 0
    assert data["lower_bound"] <= data["min_nonfeasible"] <= data["upper_bound"]


def test_pawfree(capsys):
    code, out, err = run(capsys, "pawfree", 7, 16)
    g = Graph.from_edge_list(out)
    assert code == 0 and "paw-free: true" in err
    assert (g.vertex_count, g.edge_count) == (7, 16)
    assert not has_induced(g, Pattern.PAW)


def test_uep(capsys):
    code, out, err = run(capsys, "uep", 5, 7)
    assert code == 0 and "H(5,3,0)" in err
    assert Graph.from_edge_list(out).edge_count == 7


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "linefeas", "intervals", "5", "--json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"n": 5, "nonfeasible": [[9, 9]]}
