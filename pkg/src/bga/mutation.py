"""Edge mutation: Kauer moves, their two-term complexes, and
Fomin-Zelevinsky quiver mutation for cross-checking triangulation flips.

A Kauer move at an edge s slides each half-edge of s (at a non-truncated
endpoint) along its clockwise successor edge: the half detaches and
re-attaches at the far end of that successor, immediately after the
arriving half-edge.  The minus direction slides along predecessors and
inserts immediately before, which makes it the exact inverse.  The three
pictured local cases (inner edge, pendant edge, loop) are all instances of
this one rule; the case tag is classification metadata only.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .algebra import build_quiver
from .ribbon import BrauerGraph, GraphError, truncated_at

EXCLUDED_LOOP = (
    "edge is a loop whose half-edges are direct successors of each other; "
    "no move is defined at such a loop"
)


@dataclass(frozen=True)
class Relocation:
    half: str
    old_vertex: str
    slide_edge: str
    new_vertex: str
    anchor_half: str


@dataclass(frozen=True)
class KauerMove:
    edge: str
    direction: str  # "plus" | "minus"
    case: str  # "i" (inner) | "ii" (pendant) | "iii" (loop)
    relocations: tuple[Relocation, ...]


def _check_movable(g: BrauerGraph, s: str) -> None:
    if s not in g.edges:
        raise GraphError(f"unknown edge {s!r}", "kauer_move")
    a, b = g.edges[s]
    if g.vertex_of[a] == g.vertex_of[b] and (g.sigma[a] == b or g.sigma[b] == a):
        raise GraphError(EXCLUDED_LOOP, f"kauer_move[{s}]")


def _classify(g: BrauerGraph, s: str) -> str:
    a, b = g.edges[s]
    if g.vertex_of[a] == g.vertex_of[b]:
        return "iii"
    if truncated_at(g, s):
        return "ii"
    return "i"


def plan_kauer_move(g: BrauerGraph, s: str, direction: str = "plus") -> KauerMove:
    """Compute the relocation record without applying it."""
    if direction not in ("plus", "minus"):
        raise GraphError(f"direction must be plus or minus, got {direction!r}", "kauer_move")
    _check_movable(g, s)
    sigma_inv = {t: h for h, t in g.sigma.items()}
    relocations = []
    for h in sorted(g.edges[s]):
        v = g.vertex_of[h]
        if g.multiplicity[v] * len(g.cycles[v]) < 2:
            continue  # truncated endpoint stays in place
        step = g.sigma[h] if direction == "plus" else sigma_inv[h]
        if g.edge_of[step] == s:
            continue  # own successor (multiplicity >= 2 leaf): sliding along s is a no-op
        anchor = g.iota[step]
        relocations.append(
            Relocation(
                half=h,
                old_vertex=v,
                slide_edge=g.edge_of[step],
                new_vertex=g.vertex_of[anchor],
                anchor_half=anchor,
            )
        )
    return KauerMove(edge=s, direction=direction, case=_classify(g, s), relocations=tuple(relocations))


def kauer_move(g: BrauerGraph, s: str, direction: str = "plus") -> BrauerGraph:
    """Apply the move and return the new graph.

    Vertex set, multiplicities and edge ids are preserved.  Anchors are
    computed in the input graph, then the detached halves are re-inserted
    next to them (halves anchored to the other moving half go last, after
    their anchor has settled).
    """
    move = plan_kauer_move(g, s, direction)
    moving = {r.half: r for r in move.relocations}
    cycles = {v: [h for h in c if h not in moving] for v, c in g.cycles.items()}

    def place(r: Relocation):
        for v, cyc in cycles.items():
            if r.anchor_half in cyc:
                at = cyc.index(r.anchor_half)
                if direction == "plus":
                    cyc.insert(at + 1, r.half)
                else:
                    cyc.insert(at, r.half)
                return
        raise AssertionError(f"anchor {r.anchor_half!r} vanished")

    pending = sorted(move.relocations, key=lambda r: r.half)
    pending.sort(key=lambda r: r.anchor_half in moving)  # independent halves first
    for r in pending:
        place(r)
    return g.with_cycles({v: tuple(c) for v, c in cycles.items()})


@dataclass(frozen=True)
class TwoTermComplex:
    """P(rad P_s) -> P_s in degrees one and zero."""

    degree_one: tuple[str, ...]
    degree_zero: str


def okuyama_complex(g: BrauerGraph, s: str) -> TwoTermComplex:
    """Two-term complex at s: degree zero is P_s, degree one one projective
    per non-truncated endpoint, indexed by the successor edge there."""
    _check_movable(g, s)
    degree_one = []
    for h in sorted(g.edges[s]):
        v = g.vertex_of[h]
        if g.multiplicity[v] * len(g.cycles[v]) < 2:
            continue
        degree_one.append(g.edge_of[g.sigma[h]])
    return TwoTermComplex(degree_one=tuple(degree_one), degree_zero=s)


# -- Fomin-Zelevinsky quiver mutation ---------------------------------------


@dataclass(frozen=True)
class MutableQuiver:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...]  # (source, target) multiset


def fz_mutate(q: MutableQuiver, k: str) -> MutableQuiver:
    """Three-step mutation at k: compose through k, reverse at k, cancel the
    newly created 2-cycles (new arrows cancel against opposite ones; 2-cycles
    untouched by the mutation survive)."""
    if k not in q.vertices:
        raise GraphError(f"unknown vertex {k!r}", "fz_mutate")
    into = [a for a in q.arrows if a[1] == k and a[0] != k]
    outof = [a for a in q.arrows if a[0] == k and a[1] != k]
    if any(a == (k, k) for a in q.arrows):
        raise GraphError(f"loop at {k!r}", "fz_mutate")
    if {a[0] for a in into} & {a[1] for a in outof}:
        raise GraphError(f"2-cycle at {k!r}", "fz_mutate")

    kept = Counter(a for a in q.arrows if k not in a)
    reversed_at_k = [(t, s) for (s, t) in q.arrows if k in (s, t)]
    new = Counter((i, j) for (i, _) in into for (_, j) in outof)

    for (i, j), n in sorted(new.items()):
        cancel = min(n, kept[(j, i)])
        new[(i, j)] -= cancel
        kept[(j, i)] -= cancel

    arrows = list(reversed_at_k)
    for pair, n in kept.items():
        arrows.extend([pair] * n)
    for pair, n in new.items():
        arrows.extend([pair] * n)
    return MutableQuiver(vertices=q.vertices, arrows=tuple(sorted(arrows)))


def quiver_as_mutable(g: BrauerGraph) -> MutableQuiver:
    q = build_quiver(g)
    return MutableQuiver(
        vertices=q.vertices, arrows=tuple(sorted((a.source, a.target) for a in q.arrows))
    )


@dataclass(frozen=True)
class FlipCheckReport:
    edge: str
    fz_defined: bool
    agree: bool | None
    kauer_arrows: tuple[tuple[str, str], ...]
    fz_arrows: tuple[tuple[str, str], ...]


def flip_check(g: BrauerGraph, s: str) -> FlipCheckReport:
    """Compare the quiver after a Kauer move at s with the FZ mutation of
    the quiver at s.  The two are compared as arrow multisets over the
    shared vertex set (edge ids are preserved on both sides)."""
    q = quiver_as_mutable(g)
    counts = Counter(q.arrows)
    if counts[(s, s)] or any(counts[(s, t)] and counts[(t, s)] for t in q.vertices if t != s):
        return FlipCheckReport(edge=s, fz_defined=False, agree=None, kauer_arrows=(), fz_arrows=())
    moved = quiver_as_mutable(kauer_move(g, s))
    mutated = fz_mutate(q, s)
    return FlipCheckReport(
        edge=s,
        fz_defined=True,
        agree=sorted(moved.arrows) == sorted(mutated.arrows),
        kauer_arrows=moved.arrows,
        fz_arrows=tuple(sorted(mutated.arrows)),
    )
