"""Command-line surface: goldens for output, files and exit codes."""

import json

import pytest

from bga.cli import main
from bga.ribbon import parse_graph, serialize_graph


@pytest.fixture
def g3_file(tmp_path, g3):
    p = tmp_path / "g3.bg"
    p.write_text(serialize_graph(g3))
    return str(p)


@pytest.fixture
def domestic1_file(tmp_path, domestic1):
    p = tmp_path / "domestic1.bg"
    p.write_text(serialize_graph(domestic1))
    return str(p)


@pytest.fixture
def square_file(tmp_path, square_diag):
    p = tmp_path / "square.bg"
    p.write_text(serialize_graph(square_diag))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_golden(capsys, g3_file):
    code, out, _ = run(capsys, "validate", g3_file)
    assert code == 0
    assert out.strip() == "valid: 2 vertices, 3 edges, genus 0"


def test_validate_json(capsys, g3_file):
    code, out, _ = run(capsys, "validate", "--json", g3_file)
    assert code == 0
    assert json.loads(out) == {"vertices": 2, "edges": 3, "faces": 3, "genus": 0}


def test_validate_bad_file(capsys, tmp_path):
    p = tmp_path / "bad.bg"
    p.write_text("{}")
    code, _out, err = run(capsys, "validate", str(p))
    assert code == 2 and "format" in err


def test_surface(capsys, g3_file):
    code, out, _ = run(capsys, "surface", g3_file)
    assert code == 0 and out.strip().endswith("genus 0")


def test_quiver_dot(capsys, g3_file):
    code, out, _ = run(capsys, "quiver", g3_file, "--dot")
    assert code == 0
    assert out.startswith("digraph quiver {")
    assert out.count("->") == 6


def test_relations_minimal(capsys, g3_file):
    code, out, _ = run(capsys, "relations", g3_file, "--minimal")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 3 + 6  # cycle differences plus forbidden pairs


def test_projectives(capsys, g3_file):
    code, out, _ = run(capsys, "projectives", g3_file, "--edge", "1")
    assert code == 0 and "dim 6" in out


def test_walks_table(capsys, g3_file):
    code, out, _ = run(capsys, "walks", g3_file)
    assert code == 0
    assert sorted(int(l.split()[1].rstrip(":")) for l in out.splitlines() if l) == [2, 2, 2]
    code, out, _ = run(capsys, "walks", g3_file, "--double")
    assert code == 0


def test_classify_domestic_golden(capsys, domestic1_file):
    code, out, _ = run(capsys, "classify", domestic1_file)
    assert code == 0
    assert "ℤÃ_{9,5}" in out
    assert "m=1, p=9, q=5" in out


def test_classify_json(capsys, domestic1_file):
    code, out, _ = run(capsys, "classify", domestic1_file, "--json")
    payload = json.loads(out)
    assert payload["repType"] == "domestic"
    assert payload["domestic"] == {"m": 1, "p": 9, "q": 5}
    assert payload["exceptionalTubes"] == [9, 5]


def test_mutate_writes_moved_graph(capsys, square_file, tmp_path, square_diag):
    out_path = tmp_path / "moved.bg"
    code, _out, err = run(capsys, "mutate", square_file, "--edge", "0", "-o", str(out_path))
    assert code == 0 and "case (i)" in err
    moved = parse_graph(out_path.read_text())
    assert set(moved.endpoints("0")) == {"TR", "BL"}


def test_mutate_excluded_loop(capsys, tmp_path, g2):
    p = tmp_path / "g2.bg"
    p.write_text(serialize_graph(g2))
    code, _out, err = run(capsys, "mutate", str(p), "--edge", "1")
    assert code == 2 and "direct successors" in err


def test_resolve(capsys, domestic1_file):
    code, out, _ = run(capsys, "resolve", domestic1_file, "--edge", "1", "--terms", "4")
    assert code == 0
    assert out.strip() == "P(1) -> P(7) -> P(3) -> P(2) -> P(1) -> S(1)"


def test_gentle_check_and_graph(capsys, tmp_path):
    doc = {
        "format": "gentle-algebra/1",
        "vertices": ["1", "2", "3"],
        "arrows": [
            {"id": "a1", "source": "1", "target": "2"},
            {"id": "b1", "source": "1", "target": "2"},
            {"id": "a2", "source": "2", "target": "3"},
            {"id": "b2", "source": "2", "target": "3"},
        ],
        "relations": [["a1", "a2"], ["b1", "b2"]],
    }
    p = tmp_path / "kalck.ga"
    p.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "gentle", "check", str(p))
    assert code == 0 and "all axioms hold" in out
    code, out, _ = run(capsys, "gentle", "graph", str(p))
    assert code == 0
    g = parse_graph(out)
    assert len(g.edges) == 3 and len(g.cycles) == 2


def test_trivext(capsys, tmp_path):
    doc = {
        "format": "gentle-algebra/1",
        "vertices": ["1", "2"],
        "arrows": [{"id": "a", "source": "1", "target": "2"}],
        "relations": [],
    }
    p = tmp_path / "arrow.ga"
    p.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "trivext", str(p))
    assert code == 0
    payload = json.loads(out)
    assert len(payload["presentation"]["arrows"]) == 1 + 1


def test_cut_enumerate_and_apply(capsys, g3_file):
    code, out, _ = run(capsys, "cut", g3_file, "--enumerate", "--json")
    cuts = json.loads(out)
    assert len(cuts) == 9  # three choices at each of the two vertices
    code, out, _ = run(capsys, "cut", g3_file, "--arrows", ",".join(cuts[0]))
    assert code == 0
    assert json.loads(out)["format"] == "gentle-algebra/1"


def test_tri_build_flip_params(capsys, tmp_path):
    out_path = tmp_path / "hex.bg"
    code, _out, _ = run(
        capsys, "tri", "build", "--n", "6", "--arcs", "2-4,4-6,2-6", "-o", str(out_path)
    )
    assert code == 0
    g = parse_graph(out_path.read_text())
    assert len(g.edges) == 9
    code, out, _ = run(capsys, "tri", "flip", "--n", "4", "--arcs", "1-3", "--arc", "1-3")
    assert code == 0 and out.strip() == "2-4"
    code, out, _ = run(capsys, "tri", "params", "--n", "4", "--arcs", "1-3")
    assert code == 0 and "(n,d)=(4,2)" in out


def test_tri_ice_and_compare(capsys):
    code, out, _ = run(capsys, "tri", "ice", "--n", "6", "--arcs", "2-4,4-6,2-6")
    payload = json.loads(out)
    assert len(payload["arrows"]) == 15 and len(payload["relations"]) == 9
    code, out, _ = run(capsys, "tri", "compare", "--n", "6", "--arcs", "2-4,4-6,2-6")
    payload = json.loads(out)
    assert payload["differenceIsBoundaryAtTwoArcPoints"] is True
    assert all(payload["flipMatchesKauerMove"].values())
