"""Green walks and the periodic projective resolutions they encode.

A walk step moves from a half-edge to the pair of its clockwise successor,
i.e. the permutation phi = iota o sigma.  Green walks are the cycles of
phi, double-stepped walks the cycles of phi squared.  Walks depend only on
the graph and its orientation, never on multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ribbon import BrauerGraph, GraphError, _cycles_of, truncated_at


@dataclass(frozen=True)
class GreenWalk:
    halves: tuple[str, ...]  # one full period of phi
    edges: tuple[str, ...]

    @property
    def period(self) -> int:
        return len(self.halves)


@dataclass(frozen=True)
class DoubleSteppedWalk:
    halves: tuple[str, ...]  # one full period of phi^2
    edges: tuple[str, ...]

    @property
    def period(self) -> int:
        return len(self.halves)


def _phi(g: BrauerGraph) -> dict[str, str]:
    return {h: g.iota[g.sigma[h]] for h in g.vertex_of}


def green_walk(g: BrauerGraph, start: str) -> GreenWalk:
    """The walk through ``start``: the phi-orbit, reported from ``start``."""
    if start not in g.vertex_of:
        raise GraphError(f"unknown half-edge {start!r}", "green_walk")
    phi = _phi(g)
    halves = [start]
    cur = phi[start]
    while cur != start:
        halves.append(cur)
        cur = phi[cur]
    return GreenWalk(tuple(halves), tuple(g.edge_of[h] for h in halves))


def all_green_walks(g: BrauerGraph) -> list[GreenWalk]:
    """The full cycle decomposition of phi; partitions the half-edges, so
    every edge appears exactly twice across all walk edge sequences."""
    return [
        GreenWalk(c, tuple(g.edge_of[h] for h in c)) for c in _cycles_of(_phi(g))
    ]


def double_stepped_walks(g: BrauerGraph) -> list[DoubleSteppedWalk]:
    """Cycles of phi^2.  An odd-period walk stays whole; an even-period walk
    splits into two walks of half the period."""
    phi = _phi(g)
    phi2 = {h: phi[phi[h]] for h in phi}
    return [
        DoubleSteppedWalk(c, tuple(g.edge_of[h] for h in c)) for c in _cycles_of(phi2)
    ]


def projective_resolution(
    g: BrauerGraph, eid: str, n: int, start_half: str | None = None
) -> list[str]:
    """First n+1 projectives (as edge ids) in the periodic resolution read
    off the Green walk.

    Without ``start_half`` the edge must be truncated at an endpoint and
    the walk starts with the half-edge at the other (non-truncated) end,
    where the first syzygy lives.  Passing ``start_half`` selects a walk
    explicitly (the maximal-uniserial-submodule reading).
    """
    if eid not in g.edges:
        raise GraphError(f"unknown edge {eid!r}", "projective_resolution")
    if n < 0:
        raise GraphError("term count must be >= 0", "projective_resolution")
    if start_half is None:
        trunc = truncated_at(g, eid)
        if not trunc:
            raise GraphError(
                f"edge {eid!r} is not truncated at any endpoint; pass start_half",
                "projective_resolution",
            )
        candidates = [
            h for h in g.edges[eid] if g.vertex_of[h] not in trunc
        ] or list(g.edges[eid])  # both ends truncated: single-edge graph
        start_half = min(candidates)
    elif start_half not in g.edges[eid]:
        raise GraphError(
            f"half-edge {start_half!r} does not belong to edge {eid!r}",
            "projective_resolution",
        )
    phi = _phi(g)
    out = [eid]
    cur = start_half
    for _ in range(n):
        cur = phi[cur]
        out.append(g.edge_of[cur])
    return out
