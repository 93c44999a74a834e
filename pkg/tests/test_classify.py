"""Representation type, census, exceptional subtrees, placement."""

import random

import pytest

from bga import classify
from bga.classify import (
    DOMESTIC,
    FINITE,
    NON_DOMESTIC_TAME,
    ar_components,
    domestic_parameters,
    exceptional_edges,
    module_position,
    rep_type,
    same_component,
)
from bga.ribbon import GraphError, graph_from_cycles
from bga.walks import double_stepped_walks


def star(k: int, center_mult: int):
    cycles = {"c": [f"s{i}.c" for i in range(k)]}
    edges = {}
    for i in range(k):
        cycles[f"l{i}"] = [f"s{i}.l"]
        edges[f"s{i}"] = (f"s{i}.c", f"s{i}.l")
    return graph_from_cycles(cycles, edges, {"c": center_mult})


def test_star_is_finite():
    assert rep_type(star(4, 3)).kind == FINITE
    assert rep_type(star(1, 1)).kind == FINITE  # the dual-numbers edge


def test_domestic1_classification(domestic1):
    rep = rep_type(domestic1)
    assert rep.kind == DOMESTIC and rep.domestic_m == 1
    assert domestic_parameters(domestic1) == (1, 9, 5)


def test_domestic2_classification(domestic2):
    rep = rep_type(domestic2)
    assert rep.kind == DOMESTIC and rep.domestic_m == 2
    assert domestic_parameters(domestic2) == (2, 6, 3)


def test_g1_not_domestic(g1):
    # a tree whose two big multiplicities are 2 and 3 fails every clause
    assert rep_type(g1).kind == NON_DOMESTIC_TAME


def test_two_leaf_tree_domestic():
    path = graph_from_cycles(
        {"a": ["1a"], "b": ["1b", "2b"], "c": ["2c", "3c"], "d": ["3d"]},
        {"1": ("1a", "1b"), "2": ("2b", "2c"), "3": ("3c", "3d")},
        {"a": 2, "d": 2},
    )
    assert rep_type(path).kind == DOMESTIC
    assert domestic_parameters(path) == (1, 3, 3)


def test_single_loop_is_domestic(single_loop):
    assert rep_type(single_loop) == classify.RepType(
        kind=DOMESTIC, domestic_m=1, basis="unique odd cycle of length 1"
    )
    assert domestic_parameters(single_loop) == (1, 1, 1)


def random_domestic_graph(rng):
    """Random 1- or 2-domestic graph: a cycle of random length with random
    multiplicity-one trees grafted on, or a tree with two multiplicity-2
    leaves."""
    kind = rng.choice(["cycle", "tree"])
    cycles = {}
    edges = {}
    if kind == "cycle":
        length = rng.randint(1, 6)
        if length == 1:
            cycles["w0"] = ["c0.a", "c0.b"]
            edges["c0"] = ("c0.a", "c0.b")
        elif length == 2:
            cycles["w0"] = ["c0.a", "c1.a"]
            cycles["w1"] = ["c0.b", "c1.b"]
            edges["c0"] = ("c0.a", "c0.b")
            edges["c1"] = ("c1.a", "c1.b")
        else:
            for i in range(length):
                j = (i + 1) % length
                edges[f"c{i}"] = (f"c{i}.a", f"c{i}.b")
                cycles.setdefault(f"w{i}", []).append(f"c{i}.a")
                cycles.setdefault(f"w{j}", []).append(f"c{i}.b")
        hosts = list(cycles)
        for k in range(rng.randint(0, 4)):
            host = rng.choice(hosts)
            eid = f"t{k}"
            edges[eid] = (f"{eid}.a", f"{eid}.b")
            cycles[host].insert(rng.randrange(len(cycles[host]) + 1), f"{eid}.a")
            cycles[f"leaf{k}"] = [f"{eid}.b"]
            hosts.append(f"leaf{k}")
        for c in cycles.values():
            rng.shuffle(c)
        return graph_from_cycles(cycles, edges)
    n = rng.randint(1, 5)
    for i in range(n):
        edges[f"p{i}"] = (f"p{i}.a", f"p{i}.b")
        cycles.setdefault(f"w{i}", []).append(f"p{i}.a")
        cycles.setdefault(f"w{i+1}", []).append(f"p{i}.b")
    return graph_from_cycles(cycles, edges, {"w0": 2, f"w{n}": 2})


def test_randomized_domestic_parameters():
    """The double-stepped walk periods satisfy the closed-form counts for
    every randomly built domestic graph."""
    rng = random.Random(5150)
    for _ in range(60):
        g = random_domestic_graph(rng)
        rep = rep_type(g)
        assert rep.kind == DOMESTIC
        m, p, q = domestic_parameters(g)  # raises if the counts disagree
        n = len(g.edges)
        if m == 1:
            assert p + q == 2 * n and p >= q
            if "tree" in rep.basis:
                assert p == q == n
        else:
            assert p + q == n
        walks = sorted(w.period for w in double_stepped_walks(g))
        assert walks == sorted([p] * m + [q] * m)


def test_rep_type_partitions_corpus(corpus):
    kinds = {name: rep_type(g).kind for name, g in corpus.items()}
    assert kinds["g1"] == NON_DOMESTIC_TAME
    assert kinds["g2"] == NON_DOMESTIC_TAME
    assert kinds["g3"] == NON_DOMESTIC_TAME
    assert kinds["g4"] == NON_DOMESTIC_TAME
    assert kinds["single_edge"] == FINITE
    assert kinds["tubes_graph"] == NON_DOMESTIC_TAME
    assert kinds["domestic1"] == DOMESTIC
    assert kinds["placement_graph"] == NON_DOMESTIC_TAME


def test_census_tubes_graph(tubes_graph):
    # ranks come from the double-stepped walk lengths: the even walk of
    # length 6 contributes the two rank-3 tubes, the odd walk of length 5
    # one rank-5 tube, and the loop walk one exceptional rank-1 tube
    summary = ar_components(tubes_graph)
    assert summary.exceptional_tubes == (5, 3, 3, 1)
    forms = {f.form: f.count for f in summary.families}
    assert forms["ZA_inf/<tau^5>"] == 1
    assert forms["ZA_inf/<tau^3>"] == 2
    assert forms["ZA_inf/<tau^1>"] == 1
    assert forms["ZA_inf/<tau>"] is None
    assert forms["ZA_inf^inf"] is None


def test_census_nonplanar(nonplanar):
    assert ar_components(nonplanar).exceptional_tubes == (9, 5)


def test_census_domestic1(domestic1):
    summary = ar_components(domestic1)
    assert summary.exceptional_tubes == (9, 5)
    forms = {f.form: f.count for f in summary.families}
    assert forms["ZA~(9,5)"] == 1
    assert forms["ZA_inf/<tau^9>"] == 1
    assert forms["ZA_inf/<tau^5>"] == 1
    assert forms["ZA_inf/<tau>"] is None
    assert "ZA_inf^inf" not in forms


def test_census_domestic2_follows_component_count_theorem(domestic2):
    # two tubes of each rank for a 2-domestic algebra
    summary = ar_components(domestic2)
    assert summary.exceptional_tubes == (6, 6, 3, 3)
    forms = {f.form: f.count for f in summary.families}
    assert forms["ZA~(6,3)"] == 2
    assert forms["ZA_inf/<tau^6>"] == 2
    assert forms["ZA_inf/<tau^3>"] == 2


def test_tube_count_equals_walk_count(corpus):
    for name, g in corpus.items():
        summary = ar_components(g)
        if summary.rep.kind == FINITE:
            continue
        assert len(summary.exceptional_tubes) == len(double_stepped_walks(g)), name


def test_exceptional_decomposition(placement_graph):
    dec = exceptional_edges(placement_graph)
    assert dec.non_exceptional == ("A", "B", "C", "D", "E", "F", "H", "L", "e", "f")
    by_conn = {t.connecting_vertex: t.edges for t in dec.subtrees}
    assert by_conn == {"n0": ("R",), "n2": ("U", "V"), "n8": ("P", "Q", "g")}


def test_exceptional_cycle_only():
    ring = graph_from_cycles(
        {"a": ["1a", "3a"], "b": ["1b", "2b"], "c": ["2c", "3c"]},
        {"1": ("1a", "1b"), "2": ("2b", "2c"), "3": ("3c", "3a")},
    )
    dec = exceptional_edges(ring)
    assert dec.subtrees == () and len(dec.non_exceptional) == 3


def test_exceptional_domestic1(domestic1):
    dec = exceptional_edges(domestic1)
    assert dec.non_exceptional == ("2", "3", "7")
    assert sorted(e for t in dec.subtrees for e in t.edges) == ["1", "4", "5", "6"]


def test_exceptional_rejects_finite(g1, single_edge):
    with pytest.raises(GraphError, match="finite"):
        exceptional_edges(single_edge)
    # g1 is a generalized Brauer tree and must NOT be fully pruned
    assert exceptional_edges(g1).non_exceptional == ("1",)


def test_pruning_confluence(corpus):
    rng = random.Random(11)
    for name, g in corpus.items():
        try:
            base = exceptional_edges(g)
        except GraphError:
            continue
        for _ in range(10):
            order = list(g.edge_ids)
            rng.shuffle(order)
            assert exceptional_edges(g, order=order) == base, name


def test_non_exceptional_edges_connected_never_truncated(corpus):
    from bga.ribbon import truncated_at

    for name, g in corpus.items():
        try:
            dec = exceptional_edges(g)
        except GraphError:
            continue
        assert all(not truncated_at(g, e) for e in dec.non_exceptional), name


def test_module_position_placement(placement_graph):
    pos_g = module_position(placement_graph, "simple", "g")
    assert pos_g.exceptional and pos_g.same_tube and pos_g.tube_ranks == (27, 27)
    assert module_position(placement_graph, "radical", "g").component == "tube(rank 27)"
    pos_e = module_position(placement_graph, "simple", "e")
    assert not pos_e.exceptional and pos_e.component == "ZA_inf^inf"


def test_module_position_tubes_graph(tubes_graph):
    pos = module_position(tubes_graph, "simple", "p")
    assert pos.exceptional
    assert set(pos.tube_ranks) <= {1, 3, 3, 5}


def test_module_position_errors(placement_graph, single_edge):
    with pytest.raises(GraphError):
        module_position(placement_graph, "simple", "zz")
    with pytest.raises(GraphError):
        module_position(single_edge, "simple", "e")
    with pytest.raises(GraphError):
        module_position(placement_graph, "top", "e")


def test_same_component_placement(placement_graph):
    assert same_component(placement_graph, "e", "f") is True
    assert same_component(placement_graph, "e", "e") is False
    with pytest.raises(GraphError, match="exceptional"):
        same_component(placement_graph, "e", "g")


def test_same_component_one_domestic(domestic1):
    dec = exceptional_edges(domestic1)
    for e in dec.non_exceptional:
        for f in dec.non_exceptional:
            assert same_component(domestic1, e, f) is True


def test_same_component_doubling_back():
    # non-exceptional path edge hanging off a multiplicity-2 vertex: the walk
    # may double back through it
    g = graph_from_cycles(
        {
            "a": ["1a", "3a", "4a"],
            "b": ["1b", "2b"],
            "c": ["2c", "3c"],
            "m": ["4m", "5m"],
            "y": ["5y"],
        },
        {
            "1": ("1a", "1b"),
            "2": ("2b", "2c"),
            "3": ("3c", "3a"),
            "4": ("4a", "4m"),
            "5": ("5m", "5y"),
        },
        {"y": 2, "m": 3},
    )
    dec = exceptional_edges(g)
    assert "5" in dec.non_exceptional and "4" in dec.non_exceptional
    # from 5 the walk doubles back at the multiplicity-2 leaf: even path 5,5
    assert same_component(g, "5", "5") is True
    # from 4 both directions dead-end (three edges at a, multiplicity 3 at m)
    assert same_component(g, "4", "4") is False
