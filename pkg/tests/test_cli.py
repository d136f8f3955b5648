import json
import subprocess
import sys

import pytest

from rainbow_list.cli import main
from rainbow_list.graph import write_graph
from rainbow_list import families as fam
from rainbow_list.lists import random_lists, write_lists


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_param_cycle7(capsys):
    code, out, _ = run(capsys, "param", "--graph", "cycle:7", "--param", "rc", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["value"] == 4 and rep["status"] == "proved" and rep["report_v"] == 1
    assert rep["graph"] == {"spec": "cycle:7", "n": 7, "m": 7}
    assert rep["certificates"]["upper"]["data"]["colouring"]


def test_param_petersen_src(capsys):
    code, out, _ = run(capsys, "param", "--graph", "petersen", "--param", "src", "--budget-nodes", "2e9")
    assert code == 0 and "value      4" in out and "proved" in out


def test_param_c5_srcl(capsys):
    code, out, _ = run(capsys, "param", "--graph", "cycle:5", "--param", "srcl", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["value"] == 3 and rep["status"] == "proved"


def test_exceeded_exit_code(capsys):
    code, out, _ = run(capsys, "param", "--graph", "pair-src:2,3", "--param", "srcl", "--budget-nodes", "2e4",
                       "--json")
    assert code == 2 and json.loads(out)["status"] == "exceeded"


def test_json_is_byte_identical(capsys):
    args = ("param", "--graph", "wheel:7", "--param", "src", "--json", "--seed", "3")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b and "wall_time_s" not in a
    _, c, _ = run(capsys, *args, "--timing")
    assert "wall_time_s" in c


@pytest.mark.parametrize("argv", [
    [], ["param"], ["param", "--graph", "cycle:7"], ["param", "--graph", "cycle:", "--param", "rc"],
    ["param", "--graph", "cycle:7", "--param", "xx"], ["param", "--graph", "bogus", "--param", "rc"],
    ["param", "--graph", "cycle:2", "--param", "rc"], ["param", "--graph", "cycle:7", "--param", "rc",
                                                       "--budget-nodes", "0"],
    ["param", "--graph", "cycle:7", "--param", "rc", "--budget-nodes", "lots"], ["frobnicate"],
    ["verify", "--filter", "no-such-claim"], ["construct", "--graph", "cycle:5", "--via", "cycle",
                                              "--lists", "weird:3"],
    ["construct", "--graph", "cycle:5", "--via", "universal-vertex", "--lists", "constant:3"],
    ["construct", "--graph", "wheel:5", "--via", "kmn-src", "--lists", "constant:3"],
    ["construct", "--graph", "cycle:7", "--via", "cycle", "--lists", "constant:2"],
    ["param", "--graph", "edges:0-1,2-3", "--param", "rc"],
])
def test_usage_errors_exit_one(capsys, argv):
    with pytest.raises(SystemExit) as info:
        sys.exit(main(argv))
    assert info.value.code == 1


def test_verify_filters(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "paper", "--filter", "cycles")
    assert code == 0 and "16/16 match" in out
    code, out, _ = run(capsys, "verify", "--suite", "paper", "--filter", "cns", "--json")
    rows = json.loads(out)["rows"]
    assert code == 0 and any(r["computed"] == -18 for r in rows)
    code, out, _ = run(capsys, "verify", "--filter", "figure1")
    assert code == 0 and out.count("skipped") == 2


def test_verify_with_figure1_file(tmp_path, capsys):
    # H and G chosen so src(H) = 4: a path on 5 vertices is its own spanning subgraph
    from rainbow_list.graph import format_graph_text
    p = fam.path(5)
    (tmp_path / "f.txt").write_text(format_graph_text(p) + "---\n" + format_graph_text(p))
    code, out, _ = run(capsys, "verify", "--filter", "figure1", "--figure1", str(tmp_path / "f.txt"))
    assert "figure1/src-H" in out and "match" in out
    assert code == 1  # src(G) = 4, so the G >= 5 row is a proved mismatch


def test_figure1_file_must_be_spanning(tmp_path, capsys):
    from rainbow_list.graph import format_graph_text
    (tmp_path / "f.txt").write_text(format_graph_text(fam.cycle(5)) + "---\n" + format_graph_text(fam.path(5)))
    code, _, err = run(capsys, "verify", "--filter", "figure1", "--figure1", str(tmp_path / "f.txt"))
    assert code == 1 and "spanning" in err


@pytest.mark.parametrize("graph,via,lists,prop", [
    ("wheel:9", "universal-vertex", "constant:3", "rainbow-connected"),
    ("kmn:2,4", "kmn-src", "random:2,42", "strongly-rainbow-connected"),
    ("cycle:5", "cycle", "random:3,7", "strongly-rainbow-connected"),
    ("kmn:2,10", "kmn-rc4", "random:4,1", "rainbow-connected"),
    ("multipartite:1,1,5", "multipartite", "random:3,2", None),
    ("lemma41:3", "lemma41", "random:3,5", "strongly-rainbow-connected"),
    ("lemma42:3", "lemma42", "random:2,5", "rainbow-connected"),
])
def test_construct(capsys, graph, via, lists, prop):
    code, out, _ = run(capsys, "construct", "--graph", graph, "--via", via, "--lists", lists, "--json")
    rep = json.loads(out)
    assert code == 0 and rep["holds"]
    if prop:
        assert rep["property"] == prop


def test_construct_from_list_file(tmp_path, capsys):
    write_lists(random_lists(7, 4, 3), tmp_path / "l.txt")
    code, out, _ = run(capsys, "construct", "--graph", "cycle:7", "--via", "cycle", "--lists",
                       f"file:{tmp_path / 'l.txt'}")
    assert code == 0 and "holds" in out


def test_graph_file_spec(tmp_path, capsys):
    write_graph(fam.cycle(6), tmp_path / "c6.txt")
    code, out, _ = run(capsys, "param", "--graph", f"file:{tmp_path / 'c6.txt'}", "--param", "rc")
    assert code == 0 and "value      3" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rainbow_list", "param", "--graph", "cycle:4", "--param", "src"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "value      2" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "rainbow_list", "param", "--graph", "cycle:"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 1
