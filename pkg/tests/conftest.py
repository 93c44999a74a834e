"""Shared corpus graphs and randomized generators.

The fixture graphs are drawn once from their plane (or surface) pictures:
cyclic orders are the clockwise order of the edges around each vertex.
"""

from __future__ import annotations

import random
from collections import defaultdict

import pytest

from bga.ribbon import BrauerGraph, graph_from_cycles


@pytest.fixture
def g1():
    """Generalized Brauer tree: path a-c-d with leaves, m(a)=2, m(c)=3."""
    return graph_from_cycles(
        {
            "a": ["1a"],
            "b": ["2b"],
            "c": ["1c", "2c", "3c"],
            "d": ["3d", "4d", "5d", "6d"],
            "e": ["4e"],
            "f": ["5f"],
            "g": ["6g"],
        },
        {
            "1": ("1a", "1c"),
            "2": ("2b", "2c"),
            "3": ("3c", "3d"),
            "4": ("4d", "4e"),
            "5": ("5d", "5f"),
            "6": ("6d", "6g"),
        },
        {"a": 2, "c": 3},
    )


@pytest.fixture
def g2():
    """Loop 1 at a, double edge 2,3 from a to b, pendant 4 at c."""
    return graph_from_cycles(
        {"a": ["1a", "1a'", "2a", "3a"], "b": ["2b", "4b", "3b"], "c": ["4c"]},
        {"1": ("1a", "1a'"), "2": ("2a", "2b"), "3": ("3a", "3b"), "4": ("4b", "4c")},
    )


@pytest.fixture
def g3():
    """Planar triple edge: orders (1,2,3) and (1,3,2)."""
    return graph_from_cycles(
        {"a": ["1a", "2a", "3a"], "b": ["1b", "3b", "2b"]},
        {"1": ("1a", "1b"), "2": ("2a", "2b"), "3": ("3a", "3b")},
    )


@pytest.fixture
def g4():
    """Torus triple edge: order (1,2,3) at both vertices."""
    return graph_from_cycles(
        {"a": ["1a", "2a", "3a"], "b": ["1b", "2b", "3b"]},
        {"1": ("1a", "1b"), "2": ("2a", "2b"), "3": ("3a", "3b")},
    )


@pytest.fixture
def single_loop():
    return graph_from_cycles({"v": ["h1", "h2"]}, {"l": ("h1", "h2")})


@pytest.fixture
def single_edge():
    """Both endpoints truncated: the dual-numbers algebra K[x]/(x^2)."""
    return graph_from_cycles({"v": ["h1"], "w": ["h2"]}, {"e": ("h1", "h2")})


@pytest.fixture
def tubes_graph():
    """Square v1..v4, pendant edge p at v1, loop l at v3 (halves adjacent)."""
    return graph_from_cycles(
        {
            "v1": ["d.1", "p.1", "a.1"],
            "v2": ["b.2", "a.2"],
            "v3": ["l.n", "l.e", "b.3", "c.3"],
            "v4": ["c.4", "d.4"],
            "v5": ["p.5"],
        },
        {
            "a": ("a.1", "a.2"),
            "b": ("b.2", "b.3"),
            "c": ("c.3", "c.4"),
            "d": ("d.4", "d.1"),
            "p": ("p.1", "p.5"),
            "l": ("l.n", "l.e"),
        },
    )


@pytest.fixture
def domestic1():
    """Triangle 3,2,7 on v1,v2,v3, pendant 1 at v3, interior tree 4,5,6 at v1."""
    return graph_from_cycles(
        {
            "v1": ["e7.1", "e4.1", "e3.1"],
            "v2": ["e3.2", "e2.2"],
            "v3": ["e1.3", "e2.3", "e7.3"],
            "v4": ["e1.4"],
            "v5": ["e5.5", "e6.5", "e4.5"],
            "v6": ["e6.6"],
            "v7": ["e5.7"],
        },
        {
            "1": ("e1.3", "e1.4"),
            "2": ("e2.2", "e2.3"),
            "3": ("e3.1", "e3.2"),
            "4": ("e4.1", "e4.5"),
            "5": ("e5.5", "e5.7"),
            "6": ("e6.5", "e6.6"),
            "7": ("e7.1", "e7.3"),
        },
    )


@pytest.fixture
def domestic2():
    """Hexagon with two interior pendants at corner 1 and one at corner 5."""
    return graph_from_cycles(
        {
            "c1": ["s61.1", "t8.1", "t7.1", "s12.1"],
            "c2": ["s12.2", "s23.2"],
            "c3": ["s23.3", "s34.3"],
            "c4": ["s34.4", "s45.4"],
            "c5": ["t9.5", "s56.5", "s45.5"],
            "c6": ["s61.6", "s56.6"],
            "n7": ["t7.7"],
            "n8": ["t8.8"],
            "n9": ["t9.9"],
        },
        {
            "s12": ("s12.1", "s12.2"),
            "s23": ("s23.2", "s23.3"),
            "s34": ("s34.3", "s34.4"),
            "s45": ("s45.4", "s45.5"),
            "s56": ("s56.5", "s56.6"),
            "s61": ("s61.1", "s61.6"),
            "t7": ("t7.1", "t7.7"),
            "t8": ("t8.1", "t8.8"),
            "t9": ("t9.5", "t9.9"),
        },
    )


@pytest.fixture
def nonplanar():
    """Genus-1 graph on 5 vertices and 7 edges with walks of periods 5 and 9."""
    return graph_from_cycles(
        {
            "n1": ["31.1", "15.1", "12.1"],
            "n2": ["25.2", "12.2", "42.2", "23.2"],
            "n3": ["23.3", "31.3"],
            "n4": ["54.4", "42.4"],
            "n5": ["25.5", "15.5", "54.5"],
        },
        {
            "e42": ("42.2", "42.4"),
            "e23": ("23.2", "23.3"),
            "e31": ("31.1", "31.3"),
            "e12": ("12.1", "12.2"),
            "e25": ("25.2", "25.5"),
            "e15": ("15.1", "15.5"),
            "e54": ("54.4", "54.5"),
        },
    )


@pytest.fixture
def placement_graph():
    """Sixteen-edge graph with a 4-cycle, a loop, three multiplicity-2
    vertices and three pendant subtrees; walk periods 1, 4, 27."""
    return graph_from_cycles(
        {
            "n0": ["A.0", "R.0", "Ld", "Lu"],
            "n1": ["B.1", "C.1", "A.1"],
            "n2": ["V.2", "E.2", "B.2", "U.2"],
            "n3": ["D.3", "C.3"],
            "n4": ["F.4", "D.4", "E.4"],
            "n5": ["e.5", "F.5"],
            "n6": ["f.6", "e.6"],
            "n7": ["H.7", "f.7"],
            "n8": ["g.8", "H.8"],
            "n9": ["P.9", "Q.9", "g.9"],
            "n10": ["P.10"],
            "n11": ["Q.11"],
            "n12": ["R.12"],
            "n13": ["U.13"],
            "n14": ["V.14"],
        },
        {
            "A": ("A.0", "A.1"),
            "B": ("B.1", "B.2"),
            "C": ("C.1", "C.3"),
            "D": ("D.3", "D.4"),
            "E": ("E.2", "E.4"),
            "F": ("F.4", "F.5"),
            "e": ("e.5", "e.6"),
            "f": ("f.6", "f.7"),
            "H": ("H.7", "H.8"),
            "L": ("Ld", "Lu"),
            "R": ("R.0", "R.12"),
            "U": ("U.2", "U.13"),
            "V": ("V.2", "V.14"),
            "g": ("g.8", "g.9"),
            "P": ("P.9", "P.10"),
            "Q": ("Q.9", "Q.11"),
        },
        {"n2": 2, "n7": 2, "n8": 2},
    )


@pytest.fixture
def square_diag():
    """Unit square with diagonal 0 from top-left to bottom-right and a
    pendant edge 5 above the top-left corner."""
    return graph_from_cycles(
        {
            "TL": ["e5.tl", "e1.tl", "e0.tl", "e4.tl"],
            "TR": ["e1.tr", "e2.tr"],
            "BR": ["e2.br", "e3.br", "e0.br"],
            "BL": ["e4.bl", "e3.bl"],
            "TOP": ["e5.top"],
        },
        {
            "0": ("e0.tl", "e0.br"),
            "1": ("e1.tl", "e1.tr"),
            "2": ("e2.tr", "e2.br"),
            "3": ("e3.br", "e3.bl"),
            "4": ("e4.tl", "e4.bl"),
            "5": ("e5.tl", "e5.top"),
        },
    )


ALL_FIXTURES = [
    "g1",
    "g2",
    "g3",
    "g4",
    "single_loop",
    "single_edge",
    "tubes_graph",
    "domestic1",
    "domestic2",
    "nonplanar",
    "placement_graph",
    "square_diag",
]


@pytest.fixture
def corpus(request):
    return {name: request.getfixturevalue(name) for name in ALL_FIXTURES}


def random_graph(rng: random.Random, max_vertices: int = 6, max_extra: int = 4) -> BrauerGraph:
    """Random connected Brauer graph: spanning tree plus extra edges (loops
    and parallels allowed), shuffled cyclic orders, mixed multiplicities."""
    nv = rng.randint(1, max_vertices)
    raw = [(rng.randrange(i), i) for i in range(1, nv)]
    for _ in range(rng.randint(0 if nv > 1 else 1, max_extra)):
        raw.append((rng.randrange(nv), rng.randrange(nv)))
    halves_at = defaultdict(list)
    pairs = {}
    for k, (v, w) in enumerate(raw):
        h1, h2 = f"e{k}.a", f"e{k}.b"
        pairs[f"e{k}"] = (h1, h2)
        halves_at[v].append(h1)
        halves_at[w].append(h2)
    cycles = {}
    for v in range(nv):
        hs = list(halves_at[v])
        rng.shuffle(hs)
        cycles[f"v{v}"] = hs
    mult = {f"v{v}": rng.choice([1, 1, 1, 1, 2, 2, 3]) for v in range(nv)}
    return graph_from_cycles(cycles, pairs, mult)


def relabelled_copy(rng: random.Random, g: BrauerGraph) -> BrauerGraph:
    """Same ribbon graph under a random renaming of every id."""
    hmap = {h: f"H{idx}" for idx, h in enumerate(rng.sample(g.half_edges, len(g.half_edges)))}
    vmap = {v: f"V{idx}" for idx, v in enumerate(rng.sample(g.vertex_ids, len(g.vertex_ids)))}
    emap = {e: f"E{idx}" for idx, e in enumerate(rng.sample(g.edge_ids, len(g.edge_ids)))}
    return graph_from_cycles(
        {vmap[v]: [hmap[h] for h in c] for v, c in g.cycles.items()},
        {emap[e]: (hmap[a], hmap[b]) for e, (a, b) in g.edges.items()},
        {vmap[v]: m for v, m in g.multiplicity.items()},
    )
