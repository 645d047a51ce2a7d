import json
import subprocess
import sys

import pytest

from oatgraph import (
    Colouring,
    Palette,
    classic,
    colouring_to_json,
    fixture,
    format_graph,
    parse_graph,
    random_oat,
    replay,
    sequence_from_json,
    tree_from_json,
    verify_sequence,
)
from oatgraph.cli import main


def write_graph(tmp_path, g, name="g.graph"):
    p = tmp_path / name
    p.write_text(format_graph(g))
    return str(p)


def write_colouring(tmp_path, assignment, palette, name):
    p = tmp_path / name
    p.write_text(json.dumps(colouring_to_json(Colouring(assignment, palette))))
    return str(p)


class TestRecognize:
    def test_accepts_fixture_with_round_trip_tree(self, tmp_path, capsys):
        g = fixture("fig2_imperfect").graph
        path = write_graph(tmp_path, g)
        assert main(["recognize", path, "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["format_version"] == 1
        assert doc["oat"] is True and doc["chi"] == 3
        assert replay(tree_from_json(doc["tree"])) == g

    def test_tree_out_is_loadable(self, tmp_path, capsys):
        g = fixture("domino").graph
        out = tmp_path / "tree.json"
        assert main(["recognize", write_graph(tmp_path, g), "--tree-out", str(out)]) == 0
        assert replay(tree_from_json(json.loads(out.read_text()))) == g
        assert "chi = omega = 2" in capsys.readouterr().out

    def test_rejects_fig4_with_stuck_edges(self, tmp_path, capsys):
        g = fixture("fig4_dh_not_oat").graph
        assert main(["recognize", write_graph(tmp_path, g), "--json"]) == 1
        doc = json.loads(capsys.readouterr().out)
        assert doc["oat"] is False
        assert doc["stuck_vertices"]
        assert doc["stuck_edges"]

    def test_malformed_file_exits_2_with_line(self, tmp_path, capsys):
        p = tmp_path / "bad.graph"
        p.write_text("2 1\n1 1\n")
        assert main(["recognize", str(p)]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_missing_file_exits_2(self, tmp_path, capsys):
        assert main(["recognize", str(tmp_path / "nope.graph")]) == 2


class TestRecolor:
    def test_swap_round_trips_through_verify(self, tmp_path, capsys):
        g = classic("path", 2)
        gp = write_graph(tmp_path, g)
        S = Palette.default(3)
        a = write_colouring(tmp_path, (1, 2), S, "a.json")
        b = write_colouring(tmp_path, (2, 1), S, "b.json")
        assert main(["recolor", gp, "--from", a, "--to", b, "--k", "2"]) == 0
        captured = capsys.readouterr()
        doc = json.loads(captured.out)
        assert doc["format_version"] == 1
        seq = sequence_from_json({"initial": doc["initial"], "steps": doc["steps"]})
        rep = verify_sequence(g, seq)
        assert rep.valid
        assert seq.final().assignment == (2, 1)
        assert "budget 16" in captured.err
        seq_file = tmp_path / "seq.json"
        seq_file.write_text(captured.out)
        assert main(["verify", gp, str(seq_file)]) == 0

    def test_defaults_k_to_chromatic_number(self, tmp_path, capsys):
        g = classic("path", 2)
        gp = write_graph(tmp_path, g)
        S = Palette.default(3)
        a = write_colouring(tmp_path, (1, 2), S, "a.json")
        b = write_colouring(tmp_path, (2, 1), S, "b.json")
        assert main(["recolor", gp, "--from", a, "--to", b]) == 0

    def test_identical_endpoints_give_empty_sequence(self, tmp_path, capsys):
        g = classic("path", 2)
        gp = write_graph(tmp_path, g)
        a = write_colouring(tmp_path, (1, 2), Palette.default(3), "a.json")
        assert main(["recolor", gp, "--from", a, "--to", a]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["steps"] == []

    def test_palette_too_small_exits_2(self, tmp_path, capsys):
        g = classic("complete", 2)
        gp = write_graph(tmp_path, g)
        a = write_colouring(tmp_path, (1, 2), Palette.default(2), "a.json")
        assert main(["recolor", gp, "--from", a, "--to", a, "--k", "1"]) == 2

    def test_improper_colouring_exits_2(self, tmp_path, capsys):
        g = classic("complete", 2)
        gp = write_graph(tmp_path, g)
        a = write_colouring(tmp_path, (1, 1), Palette.default(3), "a.json")
        b = write_colouring(tmp_path, (1, 2), Palette.default(3), "b.json")
        assert main(["recolor", gp, "--from", a, "--to", b, "--k", "2"]) == 2

    def test_unrecognised_graph_exits_1(self, tmp_path, capsys):
        g = classic("cycle", 5)
        gp = write_graph(tmp_path, g)
        a = write_colouring(tmp_path, (1, 2, 1, 2, 3), Palette.default(4), "a.json")
        assert main(["recolor", gp, "--from", a, "--to", a, "--k", "3"]) == 1


class TestOracle:
    def test_p2_stats(self, tmp_path, capsys):
        gp = write_graph(tmp_path, classic("path", 2))
        assert main(["oracle", gp, "--k", "3"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc == {
            "format_version": 1,
            "nodes": 6,
            "connected": True,
            "diameter": 3,
            "frozen_count": 0,
        }

    def test_k3_frozen_listing(self, tmp_path, capsys):
        gp = write_graph(tmp_path, classic("complete", 3))
        assert main(["oracle", gp, "--k", "3", "--frozen"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["frozen_count"] == 6
        assert [1, 2, 3] in doc["frozen"]

    def test_budget_exceeded_exits_2_with_bound(self, tmp_path, capsys):
        gp = write_graph(tmp_path, classic("path", 30))
        assert main(["oracle", gp, "--k", "4"]) == 2
        assert str(4**30) in capsys.readouterr().err


class TestGen:
    def test_path(self, capsys):
        assert main(["gen", "path", "5"]) == 0
        g = parse_graph(capsys.readouterr().out)
        assert g == classic("path", 5)

    def test_fixture_matches_library(self, capsys):
        assert main(["gen", "domino"]) == 0
        assert parse_graph(capsys.readouterr().out) == fixture("domino").graph

    def test_random_oat_deterministic_with_tree(self, tmp_path, capsys):
        tree_file = tmp_path / "t.json"
        assert main(["gen", "random_oat", "8", "--seed", "42", "--tree-out", str(tree_file)]) == 0
        text = capsys.readouterr().out
        g = parse_graph(text)
        assert g == replay(random_oat(8, 42))
        assert replay(tree_from_json(json.loads(tree_file.read_text()))) == g

    def test_p4_sparse(self, capsys):
        assert main(["gen", "p4_sparse", "1", "--case", "anti"]) == 0
        g = parse_graph(capsys.readouterr().out)
        assert g.n == 4

    def test_unknown_family_exits_2(self, capsys):
        assert main(["gen", "moebius", "5"]) == 2

    def test_missing_param_exits_2(self, capsys):
        assert main(["gen", "path"]) == 2

    def test_bad_param_exits_2(self, capsys):
        assert main(["gen", "cycle", "2"]) == 2


class TestCanonical:
    def test_edge(self, tmp_path, capsys):
        gp = write_graph(tmp_path, classic("complete", 2))
        assert main(["canonical", gp]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["assignment"] == [1, 2]
        assert doc["palette"] == [1, 2]

    def test_unrecognised_exits_1(self, tmp_path, capsys):
        gp = write_graph(tmp_path, classic("cycle", 5))
        assert main(["canonical", gp]) == 1


class TestVerify:
    def test_tampered_sequence_exits_1_with_step(self, tmp_path, capsys):
        g = classic("path", 2)
        gp = write_graph(tmp_path, g)
        doc = {
            "initial": {"palette": [1, 2, 3], "assignment": [1, 2]},
            "steps": [{"v": 0, "c": 3}, {"v": 1, "c": 3}],
        }
        sp = tmp_path / "seq.json"
        sp.write_text(json.dumps(doc))
        assert main(["verify", gp, str(sp)]) == 1
        out = json.loads(capsys.readouterr().out)
        assert out["valid"] is False
        assert out["first_invalid_step"] == 1

    def test_malformed_json_exits_2(self, tmp_path, capsys):
        gp = write_graph(tmp_path, classic("path", 2))
        sp = tmp_path / "seq.json"
        sp.write_text("{not json")
        assert main(["verify", gp, str(sp)]) == 2


def test_console_script_smoke(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "oatgraph", "gen", "cycle", "6"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    g = parse_graph(proc.stdout)
    assert g.n == 6 and g.edge_count == 6
    proc = subprocess.run(
        [sys.executable, "-m", "oatgraph", "recognize", "/dev/stdin"],
        input=format_graph(classic("cycle", 6)),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
