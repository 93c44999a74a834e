"""Local session service: load a graph, inspect derived data, apply moves,
undo.  Sessions are in-memory; persistence is export/import of graph files.

Mutations on one session are serialized behind a lock; reads are cheap and
may run concurrently.  Derived data (quiver, walks, classification,
projectives) is cached per graph state and invalidated by every mutation.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from typing import Any, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from . import algebra, classify, mutation, walks
from .ribbon import BrauerGraph, GraphError, parse_graph, serialize_graph


@dataclass
class Session:
    graph: Optional[BrauerGraph] = None
    history: list[tuple[dict, BrauerGraph]] = field(default_factory=list)
    cache: dict[str, Any] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)


class ServiceError(Exception):
    def __init__(self, status: int, message: str):
        self.status = status
        self.message = message
        super().__init__(message)


def classification_dict(g: BrauerGraph) -> dict:
    summary = classify.ar_components(g)
    out: dict[str, Any] = {
        "repType": summary.rep.kind,
        "basis": summary.rep.basis,
        "exceptionalTubes": list(summary.exceptional_tubes),
        "families": [
            {"form": f.form, "count": f.count if f.count is not None else "infinite"}
            for f in summary.families
        ],
    }
    if summary.rep.kind == classify.DOMESTIC:
        m, p, q = classify.domestic_parameters(g)
        out["domestic"] = {"m": m, "p": p, "q": q}
    return out


def walks_dict(g: BrauerGraph) -> dict:
    return {
        "green": [
            {"period": w.period, "halves": list(w.halves), "edges": list(w.edges)}
            for w in walks.all_green_walks(g)
        ],
        "doubleStepped": [
            {"period": w.period, "halves": list(w.halves), "edges": list(w.edges)}
            for w in walks.double_stepped_walks(g)
        ],
    }


def graph_summary(g: BrauerGraph) -> dict:
    from .ribbon import faces

    f = faces(g)
    return {
        "vertices": len(g.cycles),
        "edges": len(g.edges),
        "faces": len(f.faces),
        "genus": f.genus,
    }


def create_app() -> FastAPI:
    app = FastAPI(title="bga session service")
    sessions: dict[str, Session] = {}

    def get_session(sid: str) -> Session:
        s = sessions.get(sid)
        if s is None:
            raise ServiceError(404, f"unknown session {sid!r}")
        return s

    def get_graph(sid: str) -> tuple[Session, BrauerGraph]:
        s = get_session(sid)
        if s.graph is None:
            raise ServiceError(409, "no graph loaded in this session")
        return s, s.graph

    @app.exception_handler(ServiceError)
    async def service_error(_req: Request, exc: ServiceError):
        return JSONResponse(status_code=exc.status, content={"error": {"message": exc.message}})

    @app.exception_handler(GraphError)
    async def graph_error(_req: Request, exc: GraphError):
        return JSONResponse(
            status_code=422,
            content={"error": {"message": str(exc), "location": exc.location}},
        )

    @app.post("/session")
    async def create_session():
        sid = uuid.uuid4().hex[:12]
        sessions[sid] = Session()
        return {"sessionId": sid}

    @app.post("/session/{sid}/graph")
    async def load_graph(sid: str, request: Request):
        s = get_session(sid)
        body = (await request.body()).decode("utf-8")
        g = parse_graph(body)
        with s.lock:
            s.graph = g
            s.history.clear()
            s.cache.clear()
        return {"ok": True, "summary": graph_summary(g)}

    @app.get("/session/{sid}/graph")
    async def read_graph(sid: str):
        # the exact canonical file bytes, so client exports diff cleanly
        # against files written by the CLI
        _s, g = get_graph(sid)
        return Response(content=serialize_graph(g), media_type="application/json")

    @app.get("/session/{sid}/quiver")
    async def read_quiver(sid: str):
        s, g = get_graph(sid)
        return _cached(s, "quiver", lambda: algebra.presentation_dict(g))

    @app.get("/session/{sid}/walks")
    async def read_walks(sid: str):
        s, g = get_graph(sid)
        return _cached(s, "walks", lambda: walks_dict(g))

    @app.get("/session/{sid}/classify")
    async def read_classify(sid: str):
        s, g = get_graph(sid)
        return _cached(s, "classify", lambda: classification_dict(g))

    @app.get("/session/{sid}/projectives")
    async def read_projectives(sid: str):
        s, g = get_graph(sid)

        def build():
            out = []
            for e in g.edge_ids:
                p = algebra.projective(g, e)
                out.append(
                    {
                        "edge": p.edge,
                        "top": p.top,
                        "branches": [list(b) for b in p.branches],
                        "socle": p.socle,
                        "dimension": p.dimension,
                    }
                )
            return {"projectives": out, "algebraDimension": algebra.algebra_dimension(g)}

        return _cached(s, "projectives", build)

    @app.post("/session/{sid}/mutate")
    async def mutate(sid: str, request: Request):
        s, g = get_graph(sid)
        body = await request.json()
        edge = body.get("edge")
        direction = body.get("direction", "plus")
        if not isinstance(edge, str):
            raise ServiceError(400, "body must carry an 'edge' string")
        with s.lock:
            move = mutation.plan_kauer_move(g, edge, direction)
            new_graph = mutation.kauer_move(g, edge, direction)
            s.history.append(({"edge": edge, "direction": direction}, g))
            s.graph = new_graph
            s.cache.clear()
        return {
            "ok": True,
            "move": {
                "edge": move.edge,
                "direction": move.direction,
                "case": move.case,
                "relocations": [
                    {
                        "half": r.half,
                        "oldVertex": r.old_vertex,
                        "slideEdge": r.slide_edge,
                        "newVertex": r.new_vertex,
                        "anchorHalf": r.anchor_half,
                    }
                    for r in move.relocations
                ],
            },
            "summary": graph_summary(new_graph),
        }

    @app.post("/session/{sid}/undo")
    async def undo(sid: str):
        s = get_session(sid)
        with s.lock:
            if not s.history:
                raise ServiceError(409, "nothing to undo")
            _move, prior = s.history.pop()
            s.graph = prior
            s.cache.clear()
        return {"ok": True, "summary": graph_summary(prior)}

    return app


def _cached(s: Session, key: str, build):
    if key not in s.cache:
        s.cache[key] = build()
    return s.cache[key]


def serve(port: int, host: str = "127.0.0.1") -> None:
    import uvicorn

    uvicorn.run(create_app(), host=host, port=port, log_level="warning")
