"""Gentle algebra presentations, their ribbon graphs, trivial extensions
and admissible cuts.

A gentle presentation is a quiver with a set of length-2 monomial
relations subject to the axioms S0-S3.  Its ribbon graph has one vertex
per element of the completed maximal-path set and one edge per quiver
vertex; the cyclic order at a path-vertex is the order in which the
quiver vertices appear along the path, closed up cyclically.  The trivial
extension of a gentle algebra is the Brauer graph algebra on that ribbon
graph with multiplicity one everywhere, and deleting an admissible cut
from such a Brauer graph algebra returns a gentle algebra with the same
ribbon graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Optional

from . import algebra
from .ribbon import BrauerGraph, GraphError

GENTLE_FORMAT_TAG = "gentle-algebra/1"


@dataclass(frozen=True)
class GentleArrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class GentlePresentation:
    vertices: tuple[str, ...]
    arrows: tuple[GentleArrow, ...]
    relations: frozenset[tuple[str, str]]  # pairs of arrow names, path of length 2

    def arrow(self, name: str) -> GentleArrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)


def gentle_presentation(vertices, arrows, relations) -> GentlePresentation:
    return GentlePresentation(
        vertices=tuple(vertices),
        arrows=tuple(GentleArrow(*a) for a in arrows),
        relations=frozenset((a, b) for a, b in relations),
    )


@dataclass(frozen=True)
class GentleDiagnostics:
    ok: bool
    failures: tuple[tuple[str, str], ...]  # (axiom, description)

    def failed(self, axiom: str) -> bool:
        return any(ax == axiom for ax, _ in self.failures)


def validate_gentle(p: GentlePresentation) -> GentleDiagnostics:
    """Check S0-S3 plus well-formedness, reporting every failure.

    S0: at most two arrows in and out of every vertex.
    S1: per arrow, at most one composition continuing it outside the ideal
        (either side).
    S2: same with "inside the ideal".
    S3: relations are composable length-2 paths, and no oriented cycle
        avoids the relations (so the algebra is finite dimensional).
    """
    failures = []
    names = [a.name for a in p.arrows]
    if len(set(names)) != len(names):
        failures.append(("well-formed", "duplicate arrow names"))
    by_name = {a.name: a for a in p.arrows}
    for x, y in sorted(p.relations):
        if x not in by_name or y not in by_name:
            failures.append(("S3", f"relation ({x},{y}) names an unknown arrow"))
        elif by_name[x].target != by_name[y].source:
            failures.append(("S3", f"relation ({x},{y}) is not a composable pair"))
    for v in p.vertices:
        outs = [a for a in p.arrows if a.source == v]
        ins = [a for a in p.arrows if a.target == v]
        if len(outs) > 2:
            failures.append(("S0", f"{len(outs)} arrows start at {v}"))
        if len(ins) > 2:
            failures.append(("S0", f"{len(ins)} arrows end at {v}"))
    for a in p.arrows:
        cont = [b.name for b in p.arrows if a.target == b.source]
        before = [b.name for b in p.arrows if b.target == a.source]
        free_after = [b for b in cont if (a.name, b) not in p.relations]
        free_before = [b for b in before if (b, a.name) not in p.relations]
        dead_after = [b for b in cont if (a.name, b) in p.relations]
        dead_before = [b for b in before if (b, a.name) in p.relations]
        if len(free_after) > 1:
            failures.append(("S1", f"{a.name} composes freely with {free_after}"))
        if len(free_before) > 1:
            failures.append(("S1", f"{free_before} compose freely with {a.name}"))
        if len(dead_after) > 1:
            failures.append(("S2", f"{a.name} is killed with {dead_after}"))
        if len(dead_before) > 1:
            failures.append(("S2", f"{dead_before} are killed with {a.name}"))
    # the relation-free-cycle check needs unique free successors, so it only
    # makes sense once S1 holds
    if not any(ax == "S1" for ax, _ in failures) and _has_relation_free_cycle(p):
        failures.append(("S3", "a cycle avoids all relations (infinite dimensional)"))
    return GentleDiagnostics(ok=not failures, failures=tuple(failures))


def _has_relation_free_cycle(p: GentlePresentation) -> bool:
    nxt = _composition_successors(p)
    color = {}

    def visit(a):
        color[a] = "grey"
        b = nxt.get(a)
        if b is not None:
            if color.get(b) == "grey":
                return True
            if color.get(b) is None and visit(b):
                return True
        color[a] = "black"
        return False

    return any(visit(a.name) for a in p.arrows if a.name not in color)


def _composition_successors(p: GentlePresentation) -> dict[str, str]:
    """arrow -> the unique arrow continuing it outside the ideal (S1)."""
    nxt = {}
    for a in p.arrows:
        free = [
            b.name
            for b in p.arrows
            if a.target == b.source and (a.name, b.name) not in p.relations
        ]
        if len(free) > 1:
            raise GraphError("presentation is not gentle (S1 fails)", "maximal_paths")
        if free:
            nxt[a.name] = free[0]
    return nxt


@dataclass(frozen=True)
class MaximalPathSet:
    paths: tuple[tuple[str, ...], ...]  # nontrivial maximal paths, arrow name sequences
    trivial: tuple[str, ...]  # vertices contributing a trivial path
    coverage_violations: tuple[tuple[str, int], ...]  # vertices not covered exactly twice

    @property
    def all_elements(self) -> tuple[tuple[str, ...] | str, ...]:
        return self.paths + self.trivial


def maximal_paths(p: GentlePresentation) -> MaximalPathSet:
    """Maximal nontrivial paths avoiding the ideal, plus the trivial-path
    vertices needed so that every quiver vertex is covered exactly twice
    (with multiplicity).  Coverage violations are reported, not repaired."""
    diag = validate_gentle(p)
    if diag.failed("S1") or diag.failed("S3") or diag.failed("well-formed"):
        raise GraphError(f"presentation is not gentle: {diag.failures}", "maximal_paths")
    nxt = _composition_successors(p)
    has_prev = set(nxt.values())
    paths = []
    for a in sorted(n.name for n in p.arrows):
        if a in has_prev:
            continue
        chain = [a]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        paths.append(tuple(chain))

    by_name = {a.name: a for a in p.arrows}
    trivial = []
    for v in p.vertices:
        outs = [a for a in p.arrows if a.source == v]
        ins = [a for a in p.arrows if a.target == v]
        if len(ins) == 1 and len(outs) == 1 and (ins[0].name, outs[0].name) not in p.relations:
            trivial.append(v)
        elif not ins and len(outs) == 1:
            trivial.append(v)
        elif not outs and len(ins) == 1:
            trivial.append(v)

    coverage = {v: 0 for v in p.vertices}
    for path in paths:
        for v in _path_vertices(by_name, path):
            coverage[v] += 1
    for v in trivial:
        coverage[v] += 1
    violations = tuple((v, c) for v, c in sorted(coverage.items()) if c != 2)
    return MaximalPathSet(
        paths=tuple(paths), trivial=tuple(trivial), coverage_violations=violations
    )


def _path_vertices(by_name, path: tuple[str, ...]) -> list[str]:
    verts = [by_name[path[0]].source]
    for a in path:
        verts.append(by_name[a].target)
    return verts


def gentle_graph(p: GentlePresentation) -> BrauerGraph:
    """Ribbon graph of the presentation: one graph vertex per maximal-path
    element, one edge per quiver vertex, multiplicity one everywhere."""
    mp = maximal_paths(p)
    if mp.coverage_violations:
        raise GraphError(
            f"vertices not covered exactly twice by maximal paths: {mp.coverage_violations}",
            "gentle_graph",
        )
    by_name = {a.name: a for a in p.arrows}
    cycles: dict[str, list[str]] = {}
    slots: dict[str, list[str]] = {v: [] for v in p.vertices}
    for path in mp.paths:
        gv = "w_" + "_".join(path)
        cycles[gv] = []
        for pos, v in enumerate(_path_vertices(by_name, path)):
            half = f"{gv}#{pos}"
            cycles[gv].append(half)
            slots[v].append(half)
    for v in mp.trivial:
        gv = f"e_{v}"
        half = f"{gv}#0"
        cycles[gv] = [half]
        slots[v].append(half)
    edges = {str(v): (slots[v][0], slots[v][1]) for v in p.vertices}
    return BrauerGraph(
        [(gv, 1, tuple(c)) for gv, c in cycles.items()],
        [(e, pair) for e, pair in edges.items()],
    )


def trivial_extension(p: GentlePresentation) -> tuple[BrauerGraph, dict]:
    """The Brauer graph of the trivial extension together with the full
    Brauer presentation built on it."""
    g = gentle_graph(p)
    return g, algebra.presentation_dict(g)


# -- admissible cuts ---------------------------------------------------------


@dataclass(frozen=True)
class AdmissibleCut:
    arrows: frozenset[str]


def enumerate_admissible_cuts(g: BrauerGraph) -> list[AdmissibleCut]:
    """All choices of one quiver arrow per graph vertex of valency >= 2.

    Requires multiplicity identically one.
    """
    _require_multiplicity_one(g)
    q = algebra.build_quiver(g)
    per_vertex = []
    for v in g.vertex_ids:
        names = sorted(a.name for a in q.arrows if a.vertex == v)
        if len(g.cycles[v]) >= 2:
            per_vertex.append(names)
    cuts = []
    seen = set()
    for choice in product(*per_vertex):
        key = frozenset(choice)
        if key not in seen:
            seen.add(key)
            cuts.append(AdmissibleCut(arrows=key))
    return cuts


def cut_algebra(g: BrauerGraph, cut: AdmissibleCut) -> GentlePresentation:
    """Delete the cut arrows; the surviving forbidden compositions are the
    length-2 relations of the resulting gentle presentation."""
    _require_multiplicity_one(g)
    _require_admissible(g, cut)
    q = algebra.build_quiver(g)
    survivors = [a for a in q.arrows if a.name not in cut.arrows]
    names = {a.name for a in survivors}
    rels = [
        tuple(r.lhs)
        for r in algebra.relations(g)
        if r.kind == "III" and set(r.lhs) <= names
    ]
    return GentlePresentation(
        vertices=tuple(q.vertices),
        arrows=tuple(GentleArrow(a.name, a.source, a.target) for a in survivors),
        relations=frozenset(rels),  # type: ignore[arg-type]
    )


def _require_multiplicity_one(g: BrauerGraph):
    bad = [v for v in g.vertex_ids if g.multiplicity[v] != 1]
    if bad:
        raise GraphError(f"multiplicity must be 1 everywhere, offending: {bad}", "admissible_cut")


def _require_admissible(g: BrauerGraph, cut: AdmissibleCut):
    q = algebra.build_quiver(g)
    by_vertex: dict[str, set[str]] = {}
    for a in q.arrows:
        by_vertex.setdefault(a.vertex, set()).add(a.name)
    chosen = set(cut.arrows)
    for v in g.vertex_ids:
        if len(g.cycles[v]) < 2:
            continue
        hits = chosen & by_vertex.get(v, set())
        if len(hits) != 1:
            raise GraphError(
                f"cut must contain exactly one arrow at vertex {v}, got {sorted(hits)}",
                "admissible_cut",
            )
        chosen -= hits
    if chosen:
        raise GraphError(f"cut contains extraneous arrows: {sorted(chosen)}", "admissible_cut")


# -- gentle-algebra/1 files ---------------------------------------------------


def parse_gentle(text: str) -> GentlePresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphError(e.msg, f"line {e.lineno}, column {e.colno}") from None
    if not isinstance(doc, dict) or doc.get("format") != GENTLE_FORMAT_TAG:
        raise GraphError(f"expected format {GENTLE_FORMAT_TAG!r}", "format")
    try:
        arrows = [(a["id"], a["source"], a["target"]) for a in doc["arrows"]]
        relations = [tuple(r) for r in doc["relations"]]
        vertices = list(doc["vertices"])
    except (KeyError, TypeError) as e:
        raise GraphError(f"malformed field: {e}", "document") from None
    if any(len(r) != 2 for r in relations):
        raise GraphError("relations must be pairs of arrow ids", "relations")
    return gentle_presentation(vertices, arrows, relations)


def serialize_gentle(p: GentlePresentation) -> str:
    doc = {
        "format": GENTLE_FORMAT_TAG,
        "vertices": sorted(p.vertices),
        "arrows": [
            {"id": a.name, "source": a.source, "target": a.target}
            for a in sorted(p.arrows, key=lambda a: a.name)
        ],
        "relations": sorted([list(r) for r in p.relations]),
    }
    return json.dumps(doc, indent=2) + "\n"


# -- presentation isomorphism -------------------------------------------------


def gentle_isomorphic(p: GentlePresentation, q: GentlePresentation) -> Optional[dict[str, str]]:
    """Vertex bijection carried by some arrow bijection preserving sources,
    targets and the relation set; None if there is none.  Backtracking over
    vertex images with degree pruning; fine at corpus scale."""
    if len(p.vertices) != len(q.vertices) or len(p.arrows) != len(q.arrows):
        return None
    if len(p.relations) != len(q.relations):
        return None

    def degrees(pres, v):
        return (
            sum(1 for a in pres.arrows if a.source == v),
            sum(1 for a in pres.arrows if a.target == v),
        )

    pv = sorted(p.vertices)
    used: set[str] = set()
    assignment: dict[str, str] = {}

    def extend(i: int) -> bool:
        if i == len(pv):
            return _arrows_match(p, q, assignment)
        v = pv[i]
        for w in sorted(q.vertices):
            if w in used or degrees(p, v) != degrees(q, w):
                continue
            assignment[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            used.remove(w)
            del assignment[v]
        return False

    return dict(assignment) if extend(0) else None


def _arrows_match(p, q, vmap) -> bool:
    """Try to match arrows along vmap, honoring the relation sets."""
    buckets: dict[tuple[str, str], list[str]] = {}
    for b in q.arrows:
        buckets.setdefault((b.source, b.target), []).append(b.name)
    slots = []
    for a in p.arrows:
        key = (vmap[a.source], vmap[a.target])
        if key not in buckets or not buckets[key]:
            return False
        slots.append((a.name, buckets[key]))

    amap: dict[str, str] = {}

    def assign(i: int) -> bool:
        if i == len(slots):
            rel_image = {(amap[x], amap[y]) for x, y in p.relations}
            return rel_image == set(q.relations)
        name, cands = slots[i]
        for c in cands:
            if c in amap.values():
                continue
            amap[name] = c
            if assign(i + 1):
                return True
            del amap[name]
        return False

    return assign(0)
