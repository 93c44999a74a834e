"""Representation type, AR-component census, exceptional subtrees and
module placement for Brauer graph algebras.

Domestic parameters are read off the double-stepped Green walks (two walks
for a 1-domestic algebra, four for a 2-domestic one) and cross-checked
against the closed-form counts coming from the unique cycle, since the
"inside/outside" split of a drawing is not part of the combinatorial data.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .ribbon import BrauerGraph, GraphError
from .walks import double_stepped_walks

FINITE = "finite"
DOMESTIC = "domestic"
NON_DOMESTIC_TAME = "non-domestic tame"


@dataclass(frozen=True)
class RepType:
    kind: str  # FINITE | DOMESTIC | NON_DOMESTIC_TAME
    domestic_m: Optional[int] = None  # 1 or 2 when kind == DOMESTIC
    basis: str = ""  # which clause matched


@dataclass(frozen=True)
class Family:
    form: str  # e.g. "ZA~(p,q)", "ZA_inf/<tau>", "ZA_inf^inf"
    count: Optional[int]  # None marks an infinite family


@dataclass(frozen=True)
class ARSummary:
    rep: RepType
    exceptional_tubes: tuple[int, ...]  # ranks, sorted descending
    families: tuple[Family, ...]


def _cycle_rank(g: BrauerGraph) -> int:
    return len(g.edges) - len(g.cycles) + 1


def _unique_cycle_length(g: BrauerGraph) -> int:
    """Length of the unique cycle of a rank-1 graph: prune leaf edges
    (regardless of multiplicity) until only the cycle remains."""
    remaining = set(g.edge_ids)

    def degree(v):
        return sum(1 for e in remaining for w in g.endpoints(e) if w == v)

    changed = True
    while changed:
        changed = False
        for e in sorted(remaining):
            v, w = g.endpoints(e)
            if v != w and (degree(v) == 1 or degree(w) == 1):
                remaining.remove(e)
                changed = True
                break
    return len(remaining)


def rep_type(g: BrauerGraph) -> RepType:
    """Finite for Brauer trees; domestic per the unique-cycle/two-leaves
    characterization; non-domestic tame otherwise."""
    rank = _cycle_rank(g)
    mults = sorted(g.multiplicity.values(), reverse=True)
    n_big = sum(1 for m in mults if m > 1)
    if rank == 0 and n_big <= 1:
        return RepType(kind=FINITE, basis="brauer tree")
    if rank == 0 and n_big == 2 and mults[0] == mults[1] == 2:
        return RepType(kind=DOMESTIC, domestic_m=1, basis="tree with two multiplicity-2 vertices")
    if rank == 1 and n_big == 0:
        length = _unique_cycle_length(g)
        if length % 2 == 1:
            return RepType(kind=DOMESTIC, domestic_m=1, basis=f"unique odd cycle of length {length}")
        return RepType(kind=DOMESTIC, domestic_m=2, basis=f"unique even cycle of length {length}")
    return RepType(kind=NON_DOMESTIC_TAME)


def domestic_parameters(g: BrauerGraph) -> tuple[int, int, int]:
    """(m, p, q) with p >= q, read off the double-stepped walks and checked
    against p + q = 2n (1-domestic) or p + q = n (2-domestic)."""
    rep = rep_type(g)
    if rep.kind != DOMESTIC:
        raise GraphError(f"algebra is {rep.kind}, not domestic", "domestic_parameters")
    periods = sorted((w.period for w in double_stepped_walks(g)), reverse=True)
    n = len(g.edges)
    m = rep.domestic_m or 0
    if m == 1:
        if len(periods) != 2:
            raise GraphError(f"expected 2 double-stepped walks, got {periods}", "domestic_parameters")
        p, q = periods
        expected = 2 * n
    else:
        if len(periods) != 4 or periods[0] != periods[1] or periods[2] != periods[3]:
            raise GraphError(f"expected walk periods p,p,q,q, got {periods}", "domestic_parameters")
        p, q = periods[0], periods[2]
        expected = n
    if p + q != expected:
        raise GraphError(f"walk periods {p}+{q} != {expected}", "domestic_parameters")
    return m, p, q


def ar_components(g: BrauerGraph) -> ARSummary:
    """Component census of the stable AR quiver.

    Exceptional tubes correspond to the double-stepped walks, one tube per
    walk with rank equal to its period.  Infinite families are reported as
    markers, never enumerated.
    """
    rep = rep_type(g)
    if rep.kind == FINITE:
        return ARSummary(rep=rep, exceptional_tubes=(), families=(Family("finite", 1),))
    if rep.kind == DOMESTIC:
        m, p, q = domestic_parameters(g)
        tubes = tuple(sorted([p] * m + [q] * m, reverse=True))
        fams = [Family(f"ZA~({p},{q})", m)]
        fams += [
            Family(f"ZA_inf/<tau^{r}>", c)
            for r, c in sorted(Counter(tubes).items(), reverse=True)
        ]
        fams.append(Family("ZA_inf/<tau>", None))
        return ARSummary(rep=rep, exceptional_tubes=tubes, families=tuple(fams))
    periods = sorted((w.period for w in double_stepped_walks(g)), reverse=True)
    fams = tuple(
        [Family(f"ZA_inf/<tau^{r}>", c) for r, c in sorted(Counter(periods).items(), reverse=True)]
        + [Family("ZA_inf/<tau>", None), Family("ZA_inf^inf", None)]
    )
    return ARSummary(rep=rep, exceptional_tubes=tuple(periods), families=fams)


# -- exceptional subtrees ------------------------------------------------------


@dataclass(frozen=True)
class ExceptionalSubtree:
    edges: tuple[str, ...]
    connecting_vertex: str


@dataclass(frozen=True)
class ExceptionalDecomposition:
    subtrees: tuple[ExceptionalSubtree, ...]
    non_exceptional: tuple[str, ...]


def exceptional_edges(g: BrauerGraph, order: Optional[list[str]] = None) -> ExceptionalDecomposition:
    """Iterated pruning of leaf edges whose leaf vertex has multiplicity 1;
    the pruned edges grouped into maximal subtrees with their connecting
    vertices.  ``order`` only biases the scan order (the result is
    order-independent)."""
    remaining = set(g.edge_ids)
    pruned: list[str] = []

    def leaf_vertex(e):
        v, w = g.endpoints(e)
        if v == w:
            return None
        for u in (v, w):
            deg = sum(1 for f in remaining for x in g.endpoints(f) if x == u)
            if deg == 1 and g.multiplicity[u] == 1:
                return u
        return None

    scan = list(order) if order is not None else sorted(g.edge_ids)
    progress = True
    while progress:
        progress = False
        for e in scan:
            if e in remaining and leaf_vertex(e) is not None:
                remaining.remove(e)
                pruned.append(e)
                progress = True
    if not remaining:
        raise GraphError("every edge pruned: the algebra has finite type", "exceptional_edges")

    surviving_vertices = {v for e in remaining for v in g.endpoints(e)}
    components = _edge_components(g, set(pruned))
    subtrees = []
    for comp in components:
        verts = {v for e in comp for v in g.endpoints(e)}
        conn = sorted(verts & surviving_vertices)
        if len(conn) != 1:
            raise AssertionError(f"subtree {sorted(comp)} has connecting vertices {conn}")
        subtrees.append(ExceptionalSubtree(edges=tuple(sorted(comp)), connecting_vertex=conn[0]))
    subtrees.sort(key=lambda t: t.edges)
    return ExceptionalDecomposition(
        subtrees=tuple(subtrees), non_exceptional=tuple(sorted(remaining))
    )


def _edge_components(g: BrauerGraph, edges: set[str]) -> list[set[str]]:
    out = []
    left = set(edges)
    while left:
        seed = left.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            e = frontier.pop()
            for v in g.endpoints(e):
                for f in list(left):
                    if v in g.endpoints(f):
                        left.remove(f)
                        comp.add(f)
                        frontier.append(f)
        out.append(comp)
    return out


# -- module placement ----------------------------------------------------------


@dataclass(frozen=True)
class PositionReport:
    edge: str
    exceptional: bool
    tube_ranks: tuple[int, ...]  # tubes met by the edge's two walk visits
    same_tube: Optional[bool]
    component: str  # descriptor for the queried module


def module_position(g: BrauerGraph, query: str, eid: str) -> PositionReport:
    """Place the simple module or radical at ``eid`` in the stable AR quiver.

    query: "simple" or "radical".  An exceptional edge sits in exceptional
    tubes; the simple and the radical share one tube exactly when the edge
    occurs twice in a single double-stepped walk.
    """
    if query not in ("simple", "radical"):
        raise GraphError(f"query must be simple or radical, got {query!r}", "module_position")
    if eid not in g.edges:
        raise GraphError(f"unknown edge {eid!r}", "module_position")
    rep = rep_type(g)
    if rep.kind == FINITE:
        raise GraphError("algebra has finite type; no tube placement", "module_position")
    decomp = exceptional_edges(g)
    walks = double_stepped_walks(g)
    if eid in decomp.non_exceptional:
        if rep.kind == DOMESTIC:
            m, p, q = domestic_parameters(g)
            form = f"ZA~({p},{q})"
        else:
            form = "ZA_inf^inf"
        return PositionReport(eid, False, (), None, form)
    ranks = []
    indices = []
    for h in sorted(g.edges[eid]):
        for i, w in enumerate(walks):
            if h in w.halves:
                ranks.append(w.period)
                indices.append(i)
                break
    same = indices[0] == indices[1]
    rank_desc = ranks[0] if same else tuple(ranks)
    return PositionReport(eid, True, tuple(ranks), same, f"tube(rank {rank_desc})")


def same_component(g: BrauerGraph, e: str, f: str) -> bool:
    """Whether the simple at ``e`` and the radical of the projective at
    ``f`` share a stable AR component.

    True for every 1-domestic algebra; otherwise searched as the forced
    even-length walk through non-exceptional edges in which consecutive
    edges are the only non-exceptional edges at their shared vertex (with
    the multiplicity-2 doubling-back clause).
    """
    decomp = exceptional_edges(g)
    nonexc = set(decomp.non_exceptional)
    for x in (e, f):
        if x not in g.edges:
            raise GraphError(f"unknown edge {x!r}", "same_component")
        if x not in nonexc:
            raise GraphError(f"edge {x!r} is exceptional", "same_component")
    rep = rep_type(g)
    if rep.kind == DOMESTIC and rep.domestic_m == 1:
        return True

    def incident_nonexc(v):
        return {x for x in nonexc for w in g.endpoints(x) if w == v}

    for start_half in g.edges[e]:
        if g.is_loop(e):
            break  # a loop admits no valid walk
        cur_edge = e
        cur_vertex = g.vertex_of[g.iota[start_half]]  # far endpoint first
        steps = 1
        seen = set()
        while True:
            if steps % 2 == 0 and cur_edge == f:
                return True
            state = (cur_edge, cur_vertex, steps % 2)
            if state in seen:
                break
            seen.add(state)
            around = incident_nonexc(cur_vertex)
            if around == {cur_edge}:
                nxt = cur_edge
                if g.multiplicity[cur_vertex] != 2 or g.is_loop(cur_edge):
                    break
            elif len(around) == 2 and cur_edge in around:
                (nxt,) = around - {cur_edge}
                if g.multiplicity[cur_vertex] != 1 or g.is_loop(nxt):
                    break
            else:
                break
            v, w = g.endpoints(nxt)
            cur_vertex = w if v == cur_vertex else v
            cur_edge = nxt
            steps += 1
    return False
