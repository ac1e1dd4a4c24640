import json
import math

import pytest

from treespectra import graphs as gr
from treespectra.cli import main, read_graph_file


def _graph_file(tmp_path, g, name="g.g6"):
    f = tmp_path / name
    f.write_text(gr.to_graph6(g) + "\n")
    return str(f)


def test_read_graph_file_detects_both_formats(tmp_path):
    g6 = tmp_path / "a.g6"
    g6.write_text(gr.to_graph6(gr.cycle(5)) + "\n")
    assert read_graph_file(str(g6)) == gr.cycle(5)
    el = tmp_path / "b.edges"
    el.write_text("3\n0 1\n1 2\n")
    assert read_graph_file(str(el)) == gr.path(3)
    empty = tmp_path / "c"
    empty.write_text("\n")
    with pytest.raises(ValueError):
        read_graph_file(str(empty))


def test_construct_h_family(capsys):
    assert main(["construct", "--family", "H", "--r", "5", "--k", "3"]) == 0
    line = capsys.readouterr().out.strip()
    g = gr.parse_graph6(line)
    assert g.n > 0 and gr.is_connected(g)
    # without --k the direct odd-r construction is used
    assert main(["construct", "--family", "H", "--r", "3"]) == 0
    assert gr.parse_graph6(capsys.readouterr().out.strip()).n > 0
    # even r has no direct construction
    assert main(["construct", "--family", "H", "--r", "4"]) == 2


def test_construct_leaf_extremal_edgelist(capsys):
    code = main(
        ["construct", "--family", "leaf-extremal", "--n", "6", "--k", "1",
         "--s", "1", "--out", "edgelist"]
    )
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "6"
    assert len(lines) == 1 + 8  # K_1 joined to (K_3 plus two isolated vertices)


def test_spectrum_command(tmp_path, capsys):
    f = _graph_file(tmp_path, gr.complete(4))
    assert main(["spectrum", "--in", f, "--matrix", "adjacency"]) == 0
    vals = [float(x) for x in capsys.readouterr().out.split()]
    assert vals == pytest.approx([3, -1, -1, -1])
    assert main(["spectrum", "--in", f, "--matrix", "laplacian"]) == 0
    vals = [float(x) for x in capsys.readouterr().out.split()]
    assert vals == pytest.approx([4, 4, 4, 0])
    el = tmp_path / "p3.edges"
    el.write_text("3\n0 1\n1 2\n")
    assert main(["spectrum", "--in", str(el)]) == 0
    top = float(capsys.readouterr().out.split()[0])
    assert top == pytest.approx(math.sqrt(2))


def test_check_command(tmp_path, capsys):
    k5 = _graph_file(tmp_path, gr.complete(5))
    assert main(["check", "--in", k5, "--theorem", "T3.6", "--k", "3"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["verdict"] == "pass"
    assert rec["r"] == 4

    k3 = _graph_file(tmp_path, gr.complete(3), "k3.g6")
    assert main(["check", "--in", k3, "--theorem", "T5.2", "--k", "1"]) == 1
    assert json.loads(capsys.readouterr().out)["verdict"] == "counterexample"

    assert main(["check", "--in", k5, "--theorem", "T", "--k", "1"]) == 2


def test_find_tree_command(tmp_path, capsys):
    p4 = _graph_file(tmp_path, gr.path(4))
    assert main(["find-tree", "--in", p4, "--mode", "ktree", "--k", "2"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 3
    star = _graph_file(tmp_path, gr.star(4), "star.g6")
    assert main(["find-tree", "--in", star, "--mode", "leaftree", "--k", "1"]) == 1
    assert capsys.readouterr().out.strip() == "none"


def test_certify_command(tmp_path, capsys):
    star = _graph_file(tmp_path, gr.star(4))
    assert main(["certify", "--in", star, "--condition", "win", "--k", "3"]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["kind"] == "win_violator"
    assert cert["vertex_set"] == [0]
    assert cert["component_count"] == 4

    k4 = _graph_file(tmp_path, gr.complete(4), "k4.g6")
    assert main(["certify", "--in", k4, "--condition", "kaneko", "--k", "1"]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["kind"] == "tree_found"
    assert len(cert["edges"]) == 3


def test_verify_command(tmp_path, capsys):
    report = tmp_path / "t54.jsonl"
    code = main(
        ["verify", "--family", "connected", "--n", "4", "--theorem", "T5.4",
         "--k", "1", "--report", str(report), "--no-figure"]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "total=38" in out and "counterexample=0" in out
    assert report.exists()
    assert report.with_suffix(".csv").exists()
    assert not report.with_suffix(".png").exists()


def test_verify_regular_dedup_and_figure(tmp_path, capsys):
    report = tmp_path / "reg.jsonl"
    code = main(
        ["verify", "--family", "regular", "--n", "6", "--r", "3", "--dedup",
         "--theorem", "T5.2", "--k", "1", "--report", str(report)]
    )
    assert code == 0
    assert "total=2" in capsys.readouterr().out
    assert report.with_suffix(".png").stat().st_size > 1000


def test_verify_surfaces_the_order3_mismatch(tmp_path, capsys):
    report = tmp_path / "n3.jsonl"
    code = main(
        ["verify", "--family", "connected", "--n", "3", "--theorem", "T5.2",
         "--k", "1", "--report", str(report), "--no-figure"]
    )
    assert code == 1
    assert "counterexample=1" in capsys.readouterr().out


def test_missing_input_file_is_usage_error(tmp_path, capsys):
    code = main(["spectrum", "--in", str(tmp_path / "nope.g6")])
    assert code == 2
    assert "error:" in capsys.readouterr().err
