"""Half-edge ribbon graphs with per-vertex multiplicities (Brauer graphs).

A Brauer graph is stored as a triple of permutation-like maps on a finite
set of half-edges:

* ``sigma`` -- at every vertex, the clockwise cyclic successor of each
  half-edge (one cycle per vertex),
* ``iota``  -- the fixed-point-free pairing that glues two half-edges into
  an edge,
* ``vertex_of`` / ``edge_of`` -- the attachment maps.

Loops and parallel edges are unproblematic in this encoding: a loop is an
edge whose two half-edges sit at the same vertex.  All values are immutable
after construction and every operation is a pure function.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

FORMAT_TAG = "brauer-graph/1"


class GraphError(ValueError):
    """Raised for malformed or inconsistent Brauer graph data.

    ``location`` names the field (or line) the problem was found at.
    """

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class BrauerGraph:
    """Immutable Brauer graph.

    Parameters are validated on construction; instances should never be
    mutated afterwards.

    ``vertices``  -- iterable of (vertex id, multiplicity, half-edge cycle),
                     the cycle read as the clockwise successor order.
    ``edges``     -- iterable of (edge id, (half, half)).
    """

    def __init__(
        self,
        vertices: Iterable[tuple[str, int, Sequence[str]]],
        edges: Iterable[tuple[str, tuple[str, str]]],
    ):
        self.cycles: dict[str, tuple[str, ...]] = {}
        self.multiplicity: dict[str, int] = {}
        self.edges: dict[str, tuple[str, str]] = {}
        self.vertex_of: dict[str, str] = {}
        self.edge_of: dict[str, str] = {}
        self.sigma: dict[str, str] = {}
        self.iota: dict[str, str] = {}

        for vid, mult, cycle in vertices:
            if vid in self.cycles:
                raise GraphError(f"duplicate vertex id {vid!r}", f"vertices[{vid}]")
            if mult < 1:
                raise GraphError(f"multiplicity must be >= 1, got {mult}", f"vertices[{vid}]")
            if not cycle:
                raise GraphError("empty half-edge cycle", f"vertices[{vid}]")
            for h in cycle:
                if h in self.vertex_of:
                    raise GraphError(f"half-edge {h!r} used twice", f"vertices[{vid}]")
                self.vertex_of[h] = vid
            self.cycles[vid] = tuple(cycle)
            self.multiplicity[vid] = int(mult)
            n = len(cycle)
            for i, h in enumerate(cycle):
                self.sigma[h] = cycle[(i + 1) % n]

        for eid, halves in edges:
            if eid in self.edges:
                raise GraphError(f"duplicate edge id {eid!r}", f"edges[{eid}]")
            if len(halves) != 2:
                raise GraphError("an edge pairs exactly 2 half-edges", f"edges[{eid}]")
            a, b = halves
            if a == b:
                raise GraphError(f"edge pairs half-edge {a!r} with itself", f"edges[{eid}]")
            for h in (a, b):
                if h not in self.vertex_of:
                    raise GraphError(f"half-edge {h!r} not in any vertex cycle", f"edges[{eid}]")
                if h in self.edge_of:
                    raise GraphError(f"half-edge {h!r} paired twice", f"edges[{eid}]")
                self.edge_of[h] = eid
            self.edges[eid] = (a, b)
            self.iota[a] = b
            self.iota[b] = a

        unpaired = set(self.vertex_of) - set(self.edge_of)
        if unpaired:
            raise GraphError(f"half-edges not paired by any edge: {sorted(unpaired)}", "edges")
        if not self.edges:
            raise GraphError("graph has no edges", "edges")
        self._check_connected()

    # -- basic queries ---------------------------------------------------

    @property
    def half_edges(self) -> list[str]:
        return sorted(self.vertex_of)

    @property
    def vertex_ids(self) -> list[str]:
        return sorted(self.cycles)

    @property
    def edge_ids(self) -> list[str]:
        return sorted(self.edges)

    def endpoints(self, eid: str) -> tuple[str, str]:
        """Vertices at the two half-edges of ``eid`` (equal for a loop)."""
        a, b = self.edges[eid]
        return self.vertex_of[a], self.vertex_of[b]

    def is_loop(self, eid: str) -> bool:
        v, w = self.endpoints(eid)
        return v == w

    def _check_connected(self):
        start = next(iter(self.vertex_of))
        seen = {start}
        stack = [start]
        while stack:
            h = stack.pop()
            for nxt in (self.sigma[h], self.iota[h]):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if len(seen) != len(self.vertex_of):
            raise GraphError("graph is not connected", "vertices")

    def __eq__(self, other) -> bool:
        """Structural equality: same ids, same cyclic orders (rotation does
        not matter), same pairing and multiplicities."""
        if not isinstance(other, BrauerGraph):
            return NotImplemented
        return (
            {v: _least_rotation(c) for v, c in self.cycles.items()}
            == {v: _least_rotation(c) for v, c in other.cycles.items()}
            and self.multiplicity == other.multiplicity
            and {e: frozenset(h) for e, h in self.edges.items()}
            == {e: frozenset(h) for e, h in other.edges.items()}
        )

    def __repr__(self) -> str:
        return f"BrauerGraph({len(self.cycles)} vertices, {len(self.edges)} edges)"

    def with_cycles(self, new_cycles: Mapping[str, Sequence[str]]) -> "BrauerGraph":
        """Rebuild the graph with some vertex cycles replaced (revalidates)."""
        cycles = dict(self.cycles)
        for v, c in new_cycles.items():
            cycles[v] = tuple(c)
        return BrauerGraph(
            [(v, self.multiplicity[v], cycles[v]) for v in self.cycles],
            list(self.edges.items()),
        )


@dataclass(frozen=True)
class FaceSet:
    """Faces (boundary walks) of the ribbon graph plus the genus of the
    closed surface obtained by capping every face with a disc."""

    faces: tuple[tuple[str, ...], ...]
    genus: int


def valency(g: BrauerGraph, v: str) -> int:
    """Number of half-edges at ``v``; a loop contributes 2."""
    if v not in g.cycles:
        raise GraphError(f"unknown vertex {v!r}", "valency")
    return len(g.cycles[v])


def is_truncated(g: BrauerGraph, eid: str, v: str) -> bool:
    """True iff edge ``eid`` meets ``v`` and m(v) * val(v) = 1."""
    if eid not in g.edges:
        raise GraphError(f"unknown edge {eid!r}", "is_truncated")
    if v not in g.endpoints(eid):
        raise GraphError(f"vertex {v!r} is not an endpoint of edge {eid!r}", "is_truncated")
    return g.multiplicity[v] * valency(g, v) == 1


def truncated_at(g: BrauerGraph, eid: str) -> list[str]:
    """The endpoints of ``eid`` at which the edge is truncated."""
    a, b = g.edges[eid]
    out = []
    for h in (a, b):
        v = g.vertex_of[h]
        if g.multiplicity[v] * len(g.cycles[v]) == 1:
            out.append(v)
    return out


def is_single_truncated_edge(g: BrauerGraph) -> bool:
    """The one-edge graph with both endpoints of multiplicity 1.

    This degenerate case carries the algebra K[x]/(x^2) and is treated
    specially by the presentation layer.
    """
    if len(g.edges) != 1:
        return False
    eid = next(iter(g.edges))
    return len(truncated_at(g, eid)) == 2


def faces(g: BrauerGraph) -> FaceSet:
    """Face traces as the cycles of sigma o iota, and the resulting genus.

    Euler characteristic of the capped surface: |V| - |E| + |F| = 2 - 2g.
    """
    step = {h: g.sigma[g.iota[h]] for h in g.vertex_of}
    out = _cycles_of(step)
    nf = len(out)
    chi = len(g.cycles) - len(g.edges) + nf
    if chi % 2 != 0 or chi > 2:
        raise GraphError(f"impossible Euler characteristic {chi}", "faces")
    return FaceSet(tuple(out), (2 - chi) // 2)


def _cycles_of(perm: Mapping[str, str]) -> list[tuple[str, ...]]:
    """Cycle decomposition, each cycle rotated to its least element and the
    list sorted by that element."""
    seen = set()
    out = []
    for h in sorted(perm):
        if h in seen:
            continue
        cyc = [h]
        seen.add(h)
        cur = perm[h]
        while cur != h:
            cyc.append(cur)
            seen.add(cur)
            cur = perm[cur]
        out.append(tuple(cyc))
    return out


# -- isomorphism ---------------------------------------------------------


def isomorphic(g: BrauerGraph, h: BrauerGraph) -> Optional[dict[str, str]]:
    """A half-edge bijection commuting with sigma and iota and preserving
    multiplicities, or None.

    Anchored backtracking: an image for one half-edge of ``g`` determines
    the whole map on a connected graph, so we try every anchor image and
    propagate.
    """
    if len(g.vertex_of) != len(h.vertex_of) or len(g.cycles) != len(h.cycles):
        return None
    if sorted(_local_profile(g, v) for v in g.cycles) != sorted(
        _local_profile(h, v) for v in h.cycles
    ):
        return None
    anchor = min(g.vertex_of)
    for image in h.vertex_of:
        mapping = _propagate(g, h, anchor, image)
        if mapping is not None:
            return mapping
    return None


def _local_profile(g: BrauerGraph, v: str) -> tuple[int, int]:
    return (len(g.cycles[v]), g.multiplicity[v])


def _propagate(g, h, anchor, image):
    mapping = {anchor: image}
    stack = [anchor]
    while stack:
        x = stack.pop()
        fx = mapping[x]
        if g.multiplicity[g.vertex_of[x]] != h.multiplicity[h.vertex_of[fx]]:
            return None
        for gp, hp in ((g.sigma, h.sigma), (g.iota, h.iota)):
            y, fy = gp[x], hp[fx]
            if y in mapping:
                if mapping[y] != fy:
                    return None
            else:
                mapping[y] = fy
                stack.append(y)
    if len(set(mapping.values())) != len(g.vertex_of):
        return None
    return mapping


# -- parsing and serialization -------------------------------------------


def parse_graph(text: str) -> BrauerGraph:
    """Parse a brauer-graph/1 document (JSON)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphError(e.msg, f"line {e.lineno}, column {e.colno}") from None
    if not isinstance(doc, dict):
        raise GraphError("top level must be an object", "document")
    if doc.get("format") != FORMAT_TAG:
        raise GraphError(f"expected format {FORMAT_TAG!r}, got {doc.get('format')!r}", "format")
    vertices = []
    for i, rec in enumerate(_req_list(doc, "vertices")):
        loc = f"vertices[{i}]"
        vertices.append(
            (
                _req_str(rec, "id", loc),
                _opt_int(rec, "multiplicity", 1, loc),
                _req_str_list(rec, "cycle", loc),
            )
        )
    edges = []
    for i, rec in enumerate(_req_list(doc, "edges")):
        loc = f"edges[{i}]"
        halves = _req_str_list(rec, "halves", loc)
        if len(halves) != 2:
            raise GraphError("halves must list exactly 2 half-edges", loc)
        edges.append((_req_str(rec, "id", loc), (halves[0], halves[1])))
    return BrauerGraph(vertices, edges)


def serialize_graph(g: BrauerGraph) -> str:
    """Canonical brauer-graph/1 form.

    Vertices and edges are sorted by id, every cycle is rotated to start
    at its lexicographically least half-edge, and the two halves of an
    edge are sorted.  parse(serialize(g)) is structurally equal to g.
    """
    vertices = []
    for v in g.vertex_ids:
        cycle = _least_rotation(g.cycles[v])
        vertices.append({"id": v, "multiplicity": g.multiplicity[v], "cycle": list(cycle)})
    edges = [{"id": e, "halves": sorted(g.edges[e])} for e in g.edge_ids]
    doc = {"format": FORMAT_TAG, "vertices": vertices, "edges": edges}
    return json.dumps(doc, indent=2) + "\n"


def _least_rotation(cycle: Sequence[str]) -> tuple[str, ...]:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


def _req_list(doc, key):
    val = doc.get(key)
    if not isinstance(val, list):
        raise GraphError(f"{key!r} must be an array", key)
    return val


def _req_str(rec, key, loc):
    val = rec.get(key) if isinstance(rec, dict) else None
    if not isinstance(val, str) or not val:
        raise GraphError(f"missing or invalid {key!r}", loc)
    return val


def _opt_int(rec, key, default, loc):
    val = rec.get(key, default)
    if not isinstance(val, int) or isinstance(val, bool):
        raise GraphError(f"{key!r} must be an integer", loc)
    return val


def _req_str_list(rec, key, loc):
    val = rec.get(key) if isinstance(rec, dict) else None
    if not isinstance(val, list) or not all(isinstance(x, str) for x in val):
        raise GraphError(f"{key!r} must be an array of strings", loc)
    return val


# -- construction helper ---------------------------------------------------


def graph_from_cycles(
    vertex_cycles: Mapping[str, Sequence[str]],
    edge_pairs: Mapping[str, tuple[str, str]],
    multiplicities: Optional[Mapping[str, int]] = None,
) -> BrauerGraph:
    """Convenience constructor from plain mappings (multiplicity defaults 1)."""
    mult = dict(multiplicities or {})
    return BrauerGraph(
        [(v, mult.get(v, 1), tuple(c)) for v, c in vertex_cycles.items()],
        [(e, (a, b)) for e, (a, b) in edge_pairs.items()],
    )
