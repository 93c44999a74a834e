"""Quiver presentations and projective structure of Brauer graph algebras.

The quiver has one vertex per graph edge and one arrow per half-edge at
every non-truncated graph vertex (the arrow runs from the half-edge's edge
to its clockwise successor's edge).  The relation ideal is generated by the
three classical families: cycle-power differences (I), cycle overshoots
(II) and forbidden compositions (III).

Arrow names are deterministic, ``<vertex>:<position>`` with the position
taken in the stored cyclic order, so serialized presentations diff cleanly.
Golden tests compare arrow structure, never names.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .ribbon import BrauerGraph, GraphError, is_single_truncated_edge, valency


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str  # quiver vertex = graph edge id
    target: str
    vertex: str  # graph vertex inducing the arrow ("" for the K[x]/(x^2) loop)
    half: str  # half-edge whose successor relation defines the arrow


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    dual_numbers: bool = False  # single both-truncated edge: K[x]/(x^2)

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)


@dataclass(frozen=True)
class SpecialCycle:
    """Oriented cycle in the quiver induced by one graph vertex, listed from
    a chosen start; rotations are distinct SpecialCycle values."""

    vertex: str
    start: str  # quiver vertex the cycle starts (and ends) at
    arrows: tuple[Arrow, ...]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows)


@dataclass(frozen=True)
class Relation:
    kind: str  # "I" | "II" | "III"
    # I:  lhs - rhs with lhs = cycle_power(first), rhs = cycle_power(second)
    # II: the single path lhs
    # III: the single length-2 path lhs
    lhs: tuple[str, ...]
    rhs: tuple[str, ...] = ()
    minimal: bool = True


@dataclass(frozen=True)
class ProjectiveStructure:
    """Loewy data of one indecomposable projective: simple top, up to two
    uniserial radical branches (composition factor sequences) and the socle."""

    edge: str
    top: str
    branches: tuple[tuple[str, ...], ...]
    socle: str
    dimension: int


def build_quiver(g: BrauerGraph) -> Quiver:
    """Quiver of the Brauer graph algebra of ``g``.

    The single both-truncated edge has no successor arrows; it is returned
    as the one-loop presentation of K[x]/(x^2), flagged on the quiver.
    """
    if is_single_truncated_edge(g):
        e = next(iter(g.edges))
        loop = Arrow(name=f"{e}:x", source=e, target=e, vertex="", half="")
        return Quiver(vertices=(e,), arrows=(loop,), dual_numbers=True)
    arrows = []
    for v in g.vertex_ids:
        cycle = g.cycles[v]
        if g.multiplicity[v] * len(cycle) < 2:
            continue
        n = len(cycle)
        for i, h in enumerate(cycle):
            arrows.append(
                Arrow(
                    name=f"{v}:{i}",
                    source=g.edge_of[h],
                    target=g.edge_of[cycle[(i + 1) % n]],
                    vertex=v,
                    half=h,
                )
            )
    return Quiver(vertices=tuple(g.edge_ids), arrows=tuple(arrows))


def special_cycles(g: BrauerGraph) -> list[SpecialCycle]:
    """All special cycles: one rotation per position of each non-truncated
    vertex cycle.  A loop edge therefore yields two cycles with the same
    start, one per half-edge."""
    q = build_quiver(g)
    if q.dual_numbers:
        return []
    by_vertex: dict[str, list[Arrow]] = {}
    for a in q.arrows:
        by_vertex.setdefault(a.vertex, []).append(a)
    out = []
    for v in g.vertex_ids:
        arrs = by_vertex.get(v)
        if not arrs:
            continue
        arrs.sort(key=lambda a: int(a.name.split(":")[1]))
        n = len(arrs)
        for j in range(n):
            rot = tuple(arrs[(j + k) % n] for k in range(n))
            out.append(SpecialCycle(vertex=v, start=rot[0].source, arrows=rot))
    return out


def special_cycles_at(g: BrauerGraph, start: str, vertex: Optional[str] = None) -> list[SpecialCycle]:
    res = [c for c in special_cycles(g) if c.start == start]
    if vertex is not None:
        res = [c for c in res if c.vertex == vertex]
    return res


def _cycle_power_path(c: SpecialCycle, m: int) -> tuple[str, ...]:
    return c.names * m


def relations(g: BrauerGraph) -> list[Relation]:
    """Generators of the relation ideal, each carrying its minimality flag."""
    q = build_quiver(g)
    if q.dual_numbers:
        x = q.arrows[0].name
        return [Relation(kind="III", lhs=(x, x))]

    cycles = special_cycles(g)
    out: list[Relation] = []

    # type I: differences of full cycle powers with a common start, both ends
    # non-truncated (cycles only exist at non-truncated vertices).
    by_start: dict[str, list[SpecialCycle]] = {}
    for c in cycles:
        by_start.setdefault(c.start, []).append(c)
    for start in sorted(by_start):
        cs = by_start[start]
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                out.append(
                    Relation(
                        kind="I",
                        lhs=_cycle_power_path(cs[i], g.multiplicity[cs[i].vertex]),
                        rhs=_cycle_power_path(cs[j], g.multiplicity[cs[j].vertex]),
                    )
                )

    # type II: every full cycle power extended by the cycle's first arrow.
    for c in cycles:
        m = g.multiplicity[c.vertex]
        out.append(
            Relation(
                kind="II",
                lhs=_cycle_power_path(c, m) + (c.arrows[0].name,),
                minimal=_type_ii_minimal(g, c),
            )
        )

    # type III: composable pairs that are not cyclically consecutive at a
    # common graph vertex.  Reading consecutively around the cycle already
    # admits the repeated loop at a multiplicity >= 2 leaf, so the classical
    # loop exception needs no special case here.
    consecutive = set()
    by_vertex: dict[str, list[Arrow]] = {}
    for a in q.arrows:
        by_vertex.setdefault(a.vertex, []).append(a)
    for arrs in by_vertex.values():
        arrs.sort(key=lambda a: int(a.name.split(":")[1]))
        n = len(arrs)
        for i in range(n):
            consecutive.add((arrs[i].name, arrs[(i + 1) % n].name))
    for a in q.arrows:
        for b in q.arrows:
            if a.target == b.source and (a.name, b.name) not in consecutive:
                out.append(Relation(kind="III", lhs=(a.name, b.name)))
    return out


def _type_ii_minimal(g: BrauerGraph, c: SpecialCycle) -> bool:
    """A cycle-overshoot relation is needed in a minimal generating set only
    when its start edge is truncated at the far endpoint and the successor
    edge the relation first steps onto is truncated at its own far end."""
    start_half = c.arrows[0].half
    v = g.vertex_of[g.iota[start_half]]  # far endpoint of the start edge
    if g.multiplicity[v] * valency(g, v) != 1:
        return False
    succ_half = g.sigma[c.arrows[0].half]
    other_end = g.vertex_of[g.iota[succ_half]]
    return g.multiplicity[other_end] * valency(g, other_end) == 1


def minimal_relations(g: BrauerGraph) -> list[Relation]:
    return [r for r in relations(g) if r.minimal]


def projective(g: BrauerGraph, eid: str) -> ProjectiveStructure:
    """Top, radical branches and socle of the projective at edge ``eid``.

    Each non-truncated endpoint contributes one uniserial branch: the
    successor sequence around that vertex starting after the edge, repeated
    multiplicity times, with the closing copy of the edge recorded as the
    socle.  dim P = m(v1) val(v1) + m(v2) val(v2).
    """
    if eid not in g.edges:
        raise GraphError(f"unknown edge {eid!r}", "projective")
    if is_single_truncated_edge(g):
        return ProjectiveStructure(edge=eid, top=eid, branches=(), socle=eid, dimension=2)
    branches = []
    dim = 0
    for h in sorted(g.edges[eid]):
        v = g.vertex_of[h]
        weight = g.multiplicity[v] * len(g.cycles[v])
        dim += weight
        if weight < 2:
            continue
        cur = h
        factors = []
        for _ in range(weight - 1):
            cur = g.sigma[cur]
            factors.append(g.edge_of[cur])
        branches.append(tuple(factors))
    return ProjectiveStructure(
        edge=eid, top=eid, branches=tuple(branches), socle=eid, dimension=dim
    )


def algebra_dimension(g: BrauerGraph) -> int:
    """Total dimension: sum of the projective dimensions over all edges."""
    return sum(projective(g, e).dimension for e in g.edge_ids)


# -- structured output -----------------------------------------------------


def presentation_dict(g: BrauerGraph) -> dict:
    """Machine-readable presentation: vertices, arrows, typed relations."""
    q = build_quiver(g)
    rels = relations(g)
    return {
        "dualNumbers": q.dual_numbers,
        "vertices": list(q.vertices),
        "arrows": [
            {"name": a.name, "source": a.source, "target": a.target, "vertex": a.vertex}
            for a in q.arrows
        ],
        "relations": [
            {
                "kind": r.kind,
                "terms": [list(r.lhs)] + ([list(r.rhs)] if r.rhs else []),
                "minimal": r.minimal,
            }
            for r in rels
        ],
    }


def quiver_dot(g: BrauerGraph) -> str:
    """DOT rendering: one node per edge id, labeled arrows."""
    q = build_quiver(g)
    lines = ["digraph quiver {"]
    for v in q.vertices:
        lines.append(f'  "{v}";')
    for a in q.arrows:
        lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
