"""Disc (polygon) triangulations as Brauer graphs: flips, boundary-triangle
parameters with the derived-equivalence test for discs, and frozen Jacobian
ice quivers with potential.

Marked points 1..n sit counterclockwise on a circle; the clockwise cyclic
order of the edges at a point then lists the neighbours by decreasing
counterclockwise offset, boundary predecessor first and boundary successor
last.  The Brauer graph of a triangulation always includes the n boundary
arcs and has multiplicity one everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import algebra
from .ribbon import BrauerGraph, GraphError

Chord = tuple[int, int]


@dataclass(frozen=True)
class DiscTriangulation:
    n: int
    arcs: tuple[Chord, ...]  # internal arcs (i, j), i < j, sorted

    @property
    def boundary_edges(self) -> list[str]:
        return [_bid(k, self.n) for k in range(1, self.n + 1)]

    @property
    def internal_edges(self) -> list[str]:
        return [_aid(c) for c in self.arcs]


def _bid(k: int, n: int) -> str:
    return f"b{k}"  # boundary arc from point k to k+1 (mod n)


def _aid(c: Chord) -> str:
    return f"a{c[0]}-{c[1]}"


def _norm(c) -> Chord:
    i, j = int(c[0]), int(c[1])
    return (i, j) if i < j else (j, i)


def crossing(a: Chord, b: Chord) -> bool:
    """Strict interleaving of endpoints around the polygon."""
    (p, q), (r, s) = a, b
    return (p < r < q < s) or (r < p < s < q)


def build_triangulation(n: int, arcs) -> tuple[DiscTriangulation, BrauerGraph]:
    """Validate the arc system and build the Brauer graph (boundary included)."""
    if n < 3:
        raise GraphError("a disc needs at least 3 marked points", "triangulation")
    chords = sorted({_norm(c) for c in arcs})
    for i, j in chords:
        if not (1 <= i < j <= n) or (j - i) % n in (1, n - 1):
            raise GraphError(f"({i},{j}) is not an internal chord", "triangulation")
    for a, b in combinations(chords, 2):
        if crossing(a, b):
            raise GraphError(f"arcs {a} and {b} cross", "triangulation")
    if len(chords) != n - 3:
        raise GraphError(
            f"expected {n - 3} non-crossing arcs for a triangulation, got {len(chords)}",
            "triangulation",
        )
    t = DiscTriangulation(n=n, arcs=tuple(chords))
    return t, triangulation_graph(t)


def triangulation_graph(t: DiscTriangulation) -> BrauerGraph:
    n = t.n
    incident: dict[int, list[tuple[str, int]]] = {k: [] for k in range(1, n + 1)}
    for k in range(1, n + 1):
        far = k % n + 1
        incident[k].append((_bid(k, n), far))
        incident[far].append((_bid(k, n), k))
    for c in t.arcs:
        i, j = c
        incident[i].append((_aid(c), j))
        incident[j].append((_aid(c), i))
    cycles = {}
    slots: dict[str, list[str]] = {}
    for k in range(1, n + 1):
        ordered = sorted(incident[k], key=lambda ef: -((ef[1] - k) % n))
        cyc = []
        for eid, _far in ordered:
            half = f"{eid}@{k}"
            cyc.append(half)
            slots.setdefault(eid, []).append(half)
        cycles[str(k)] = tuple(cyc)
    edges = {eid: (pair[0], pair[1]) for eid, pair in slots.items()}
    return BrauerGraph(
        [(v, 1, c) for v, c in cycles.items()],
        [(e, pair) for e, pair in edges.items()],
    )


def triangles(t: DiscTriangulation) -> list[tuple[int, int, int]]:
    """Faces of the triangulation: every point triple whose three sides are
    all edges is a face of a maximal non-crossing system."""
    present = set(t.arcs) | {_norm((k, k % t.n + 1)) for k in range(1, t.n + 1)}
    out = []
    for tri in combinations(range(1, t.n + 1), 3):
        a, b, c = tri
        if {_norm((a, b)), _norm((b, c)), _norm((a, c))} <= present:
            out.append(tri)
    return out


def flip(t: DiscTriangulation, arc) -> DiscTriangulation:
    """Replace an internal arc by the other diagonal of the quadrilateral
    formed by its two adjacent triangles."""
    arc = _norm(arc)
    if arc not in t.arcs:
        raise GraphError(f"{arc} is not an internal arc", "flip")
    adjacent = [tri for tri in triangles(t) if set(arc) <= set(tri)]
    if len(adjacent) != 2:
        raise GraphError(f"arc {arc} does not separate two triangles", "flip")
    apexes = sorted(set(adjacent[0]) ^ set(adjacent[1]))
    new_arcs = tuple(sorted(set(t.arcs) - {arc} | {_norm(apexes)}))
    return DiscTriangulation(n=t.n, arcs=new_arcs)


@dataclass(frozen=True)
class Parameters:
    genus: int
    boundary_components: int
    pairs: tuple[tuple[int, int], ...]  # (marked points, boundary triangles)


def parameters(t: DiscTriangulation) -> Parameters:
    """Disc parameters (0, 1, (n, d)): d counts triangles with exactly two
    boundary sides."""
    boundary = {_norm((k, k % t.n + 1)) for k in range(1, t.n + 1)}
    d = 0
    for a, b, c in triangles(t):
        sides = [_norm((a, b)), _norm((b, c)), _norm((a, c))]
        if sum(1 for s in sides if s in boundary) == 2:
            d += 1
    return Parameters(genus=0, boundary_components=1, pairs=((t.n, d),))


def ladkani_equivalent(t1: DiscTriangulation, t2: DiscTriangulation) -> bool:
    """Equal parameters; for discs this decides derived equivalence of the
    associated gentle algebras."""
    if t1.n != t2.n:
        raise GraphError("triangulations of different polygons", "ladkani_equivalent")
    return parameters(t1) == parameters(t2)


def flip_is_kauer(t: DiscTriangulation) -> list[tuple[Chord, bool]]:
    """For every internal arc, whether flipping agrees (as ribbon graphs)
    with the edge slide on the Brauer graph."""
    from . import mutation
    from .ribbon import isomorphic

    g = triangulation_graph(t)
    out = []
    for arc in t.arcs:
        flipped = triangulation_graph(flip(t, arc))
        moved = mutation.kauer_move(g, _aid(arc))
        out.append((arc, isomorphic(flipped, moved) is not None))
    return out


# -- ice quivers with potential ----------------------------------------------


@dataclass(frozen=True)
class IceQuiverWithPotential:
    vertices: tuple[str, ...]
    frozen: frozenset[str]
    arrows: tuple[tuple[str, str, str], ...]  # (name, source, target)
    potential: tuple[tuple[int, tuple[str, ...]], ...]  # (sign, arrow name cycle)
    boundary_arrows: tuple[str, ...]


def ice_quiver(t: DiscTriangulation) -> IceQuiverWithPotential:
    """Quiver on all edges of the triangulation with the boundary arcs
    frozen.  Arrows are the clockwise successor relations, except that the
    boundary-to-boundary arrow at a point incident to only two arcs is
    omitted.  The potential is the sum of the triangle cycles minus the sum
    of the cycles through a boundary arrow."""
    n = t.n
    g = triangulation_graph(t)
    arrows = []
    boundary_arrows = []
    succ_arrow: dict[tuple[int, str], tuple[str, str]] = {}
    for k in range(1, n + 1):
        cyc = g.cycles[str(k)]
        val = len(cyc)
        for i, h in enumerate(cyc):
            src = g.edge_of[h]
            tgt = g.edge_of[cyc[(i + 1) % val]]
            name = f"{k}:{i}"
            # wrap-around from the boundary successor arc to the boundary
            # predecessor arc: the boundary arrow at this marked point
            if src == _bid(k, n) and tgt == _bid((k - 2) % n + 1, n):
                boundary_arrows.append(name)
                if val == 2:
                    continue
            arrows.append((name, src, tgt))
            succ_arrow[(k, src)] = (name, tgt)

    frozen = frozenset(_bid(k, n) for k in range(1, n + 1))
    potential: list[tuple[int, tuple[str, ...]]] = []
    for tri in triangles(t):
        cycle_names = []
        edges_of_tri = {
            _edge_id_of(t, (tri[0], tri[1])),
            _edge_id_of(t, (tri[1], tri[2])),
            _edge_id_of(t, (tri[0], tri[2])),
        }
        for corner in tri:
            sides = [
                (eid, far)
                for (eid, far) in _incident_with_far(t, corner)
                if eid in edges_of_tri
            ]
            first, second = sorted(sides, key=lambda ef: -((ef[1] - corner) % n))
            name, tgt = succ_arrow[(corner, first[0])]
            if tgt != second[0]:
                raise AssertionError("triangle sides are not successor-adjacent")
            cycle_names.append((first[0], name))
        potential.append((1, _compose_cycle(arrows, [nm for _, nm in cycle_names])))
    for k in range(1, n + 1):
        val = len(g.cycles[str(k)])
        if val <= 2:
            continue
        names = [f"{k}:{i}" for i in range(val)]
        potential.append((-1, tuple(names[val - 1 :] + names[: val - 1])))
    return IceQuiverWithPotential(
        vertices=tuple(g.edge_ids),
        frozen=frozen,
        arrows=tuple(arrows),
        potential=tuple(potential),
        boundary_arrows=tuple(sorted(set(boundary_arrows) & {a[0] for a in arrows})),
    )


def _incident_with_far(t: DiscTriangulation, k: int):
    n = t.n
    out = [(_bid(k, n), k % n + 1), (_bid((k - 2) % n + 1, n), (k - 2) % n + 1)]
    for c in t.arcs:
        if k == c[0]:
            out.append((_aid(c), c[1]))
        elif k == c[1]:
            out.append((_aid(c), c[0]))
    return out


def _edge_id_of(t: DiscTriangulation, pair) -> str:
    c = _norm(pair)
    if (c[1] - c[0]) % t.n in (1, t.n - 1):
        k = c[0] if (c[1] - c[0]) % t.n == 1 else c[1]
        return _bid(k, t.n)
    return _aid(c)


def _compose_cycle(arrows, names: list[str]) -> tuple[str, ...]:
    """Order the given arrows into a composable cycle, starting at the
    lexicographically least name."""
    by_name = {a[0]: a for a in arrows}
    start = min(names)
    ordered = [start]
    cur = by_name[start]
    remaining = set(names) - {start}
    while remaining:
        nxt = [nm for nm in remaining if by_name[nm][1] == cur[2]]
        if len(nxt) != 1:
            raise AssertionError(f"cycle {names} does not compose")
        ordered.append(nxt[0])
        cur = by_name[nxt[0]]
        remaining.remove(nxt[0])
    if by_name[ordered[-1]][2] != by_name[ordered[0]][1]:
        raise AssertionError(f"cycle {names} does not close")
    return tuple(ordered)


def frozen_relations(iq: IceQuiverWithPotential) -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
    """Cyclic derivatives of the potential at every arrow that is not
    frozen-to-frozen, written as (positive path, negative path)."""
    heads = {a[0]: (a[1], a[2]) for a in iq.arrows}
    out = []
    for name in sorted(heads):
        src, tgt = heads[name]
        if src in iq.frozen and tgt in iq.frozen:
            continue
        pos: list[tuple[str, ...]] = []
        neg: list[tuple[str, ...]] = []
        for sign, cycle in iq.potential:
            for i, nm in enumerate(cycle):
                if nm == name:
                    rest = cycle[i + 1 :] + cycle[:i]
                    (pos if sign > 0 else neg).append(rest)
        if len(pos) != 1 or len(neg) != 1:
            raise GraphError(
                f"derivative at {name} is not a two-term commutativity relation",
                "frozen_relations",
            )
        out.append((pos[0], neg[0]))
    return out


def compare_frozen_vs_brauer(t: DiscTriangulation) -> dict:
    """Arrow-multiset difference between the Brauer graph quiver of the
    triangulation (boundary included) and the ice quiver.  The difference
    must consist exactly of the boundary arrows at two-arc marked points."""
    g = triangulation_graph(t)
    full = algebra.build_quiver(g)
    iq = ice_quiver(t)
    full_pairs = sorted((a.source, a.target) for a in full.arrows)
    ice_pairs = sorted((a[1], a[2]) for a in iq.arrows)
    diff = list(full_pairs)
    for p in ice_pairs:
        diff.remove(p)
    expected = []
    n = t.n
    for k in range(1, n + 1):
        if len(g.cycles[str(k)]) == 2:
            expected.append((_bid(k, n), _bid((k - 2) % n + 1, n)))
    return {
        "difference": sorted(diff),
        "expected_boundary_at_two_arc_points": sorted(expected),
        "ok": sorted(diff) == sorted(expected),
    }
