"""Command-line front end.  Every subcommand has a machine-readable variant
behind --json; all numeric output is exact integers."""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra, classify, gentle, mutation, service, triangulation, walks
from .ribbon import GraphError, faces, parse_graph, serialize_graph

PRETTY_FORMS = {
    "ZA_inf/<tau>": "ℤA∞/⟨τ⟩",
    "ZA_inf^inf": "ℤA∞^∞",
}


def _pretty_form(form: str) -> str:
    if form in PRETTY_FORMS:
        return PRETTY_FORMS[form]
    if form.startswith("ZA~(") and form.endswith(")"):
        p, q = form[4:-1].split(",")
        return f"ℤÃ_{{{p},{q}}}"
    if form.startswith("ZA_inf/<tau^") and form.endswith(">"):
        return f"ℤA∞/⟨τ^{form[12:-1]}⟩"
    return form


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _load_graph(path: str):
    return parse_graph(_read(path))


def cmd_validate(args) -> int:
    g = _load_graph(args.file)
    f = faces(g)
    if args.json:
        _emit_json(service.graph_summary(g))
    else:
        print(f"valid: {len(g.cycles)} vertices, {len(g.edges)} edges, genus {f.genus}")
    return 0


def cmd_surface(args) -> int:
    g = _load_graph(args.file)
    f = faces(g)
    if args.json:
        _emit_json({"faces": [list(c) for c in f.faces], "genus": f.genus})
    else:
        for c in f.faces:
            print(f"face of length {len(c)}: {' '.join(c)}")
        print(f"genus {f.genus}")
    return 0


def cmd_quiver(args) -> int:
    g = _load_graph(args.file)
    if args.dot:
        print(algebra.quiver_dot(g), end="")
        return 0
    pres = algebra.presentation_dict(g)
    if args.json:
        _emit_json(pres)
    else:
        print(f"vertices: {' '.join(pres['vertices'])}")
        for a in pres["arrows"]:
            print(f"  {a['name']}: {a['source']} -> {a['target']}")
    return 0


def cmd_relations(args) -> int:
    g = _load_graph(args.file)
    rels = algebra.minimal_relations(g) if args.minimal else algebra.relations(g)
    if args.json:
        _emit_json(
            [
                {"kind": r.kind, "lhs": list(r.lhs), "rhs": list(r.rhs), "minimal": r.minimal}
                for r in rels
            ]
        )
    else:
        for r in rels:
            body = " ".join(r.lhs) + (f"  -  {' '.join(r.rhs)}" if r.rhs else "")
            star = "*" if r.minimal else " "
            print(f"{star} {r.kind}: {body}")
    return 0


def cmd_projectives(args) -> int:
    g = _load_graph(args.file)
    edge_ids = [args.edge] if args.edge else g.edge_ids
    rows = [algebra.projective(g, e) for e in edge_ids]
    if args.json:
        _emit_json(
            [
                {
                    "edge": p.edge,
                    "top": p.top,
                    "branches": [list(b) for b in p.branches],
                    "socle": p.socle,
                    "dimension": p.dimension,
                }
                for p in rows
            ]
        )
    else:
        for p in rows:
            branches = " | ".join(",".join(b) for b in p.branches) or "-"
            print(f"P({p.edge}): top {p.top}; branches {branches}; socle {p.socle}; dim {p.dimension}")
        if not args.edge:
            print(f"algebra dimension {algebra.algebra_dimension(g)}")
    return 0


def cmd_walks(args) -> int:
    g = _load_graph(args.file)
    rows = walks.double_stepped_walks(g) if args.double else walks.all_green_walks(g)
    if args.json:
        _emit_json(
            [{"period": w.period, "halves": list(w.halves), "edges": list(w.edges)} for w in rows]
        )
    else:
        for w in rows:
            print(f"period {w.period}: {' '.join(w.edges)}")
    return 0


def cmd_mutate(args) -> int:
    g = _load_graph(args.file)
    move = mutation.plan_kauer_move(g, args.edge, args.direction)
    out = mutation.kauer_move(g, args.edge, args.direction)
    text = serialize_graph(out)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.json:
        _emit_json(
            {
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
                "graph": json.loads(text),
            }
        )
    else:
        print(f"kauer move at {move.edge} ({move.direction}), case ({move.case})", file=sys.stderr)
        for r in move.relocations:
            print(
                f"  half {r.half}: {r.old_vertex} -> {r.new_vertex} along {r.slide_edge}",
                file=sys.stderr,
            )
        if not args.output:
            print(text, end="")
    return 0


def cmd_classify(args) -> int:
    g = _load_graph(args.file)
    if args.json:
        _emit_json(service.classification_dict(g))
        return 0
    summary = classify.ar_components(g)
    print(f"representation type: {summary.rep.kind}"
          + (f" ({summary.rep.basis})" if summary.rep.basis else ""))
    if summary.rep.kind == classify.DOMESTIC:
        m, p, q = classify.domestic_parameters(g)
        print(f"domestic parameters: m={m}, p={p}, q={q}")
    if summary.exceptional_tubes:
        print(f"exceptional tube ranks: {', '.join(map(str, summary.exceptional_tubes))}")
    for fam in summary.families:
        count = "infinitely many" if fam.count is None else str(fam.count)
        print(f"  {count} x {_pretty_form(fam.form)}")
    return 0


def cmd_resolve(args) -> int:
    g = _load_graph(args.file)
    terms = walks.projective_resolution(g, args.edge, args.terms, args.start_half)
    if args.json:
        _emit_json({"edge": args.edge, "projectives": terms})
    else:
        print(" -> ".join(f"P({e})" for e in reversed(terms)) + f" -> S({args.edge})")
    return 0


def cmd_gentle(args) -> int:
    p = gentle.parse_gentle(_read(args.file))
    if args.action == "check":
        diag = gentle.validate_gentle(p)
        if args.json:
            _emit_json({"ok": diag.ok, "failures": [list(f) for f in diag.failures]})
        else:
            if diag.ok:
                print("gentle: all axioms hold")
            for ax, msg in diag.failures:
                print(f"fail {ax}: {msg}")
        return 0 if diag.ok else 1
    graph = gentle.gentle_graph(p)
    print(serialize_graph(graph), end="")
    return 0


def cmd_trivext(args) -> int:
    p = gentle.parse_gentle(_read(args.file))
    graph, pres = gentle.trivial_extension(p)
    payload = {"graph": json.loads(serialize_graph(graph)), "presentation": pres}
    _emit_json(payload)
    return 0


def cmd_cut(args) -> int:
    g = _load_graph(args.file)
    if args.enumerate:
        cuts = gentle.enumerate_admissible_cuts(g)
        if args.json:
            _emit_json([sorted(c.arrows) for c in cuts])
        else:
            for c in cuts:
                print(" ".join(sorted(c.arrows)))
        return 0
    if not args.arrows:
        raise GraphError("pass --arrows a,b,... or --enumerate", "cut")
    cut = gentle.AdmissibleCut(frozenset(args.arrows.split(",")))
    pres = gentle.cut_algebra(g, cut)
    print(gentle.serialize_gentle(pres), end="")
    return 0


def _parse_arcs(text: str):
    if not text.strip():
        return []
    return [tuple(map(int, part.split("-"))) for part in text.split(",")]


def cmd_tri(args) -> int:
    t, graph = triangulation.build_triangulation(args.n, _parse_arcs(args.arcs))
    if args.action == "build":
        text = serialize_graph(graph)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            print(text, end="")
        return 0
    if args.action == "flip":
        if not args.arc:
            raise GraphError("pass --arc i-j", "tri flip")
        (pair,) = _parse_arcs(args.arc)
        flipped = triangulation.flip(t, pair)
        payload = {
            "n": flipped.n,
            "arcs": [f"{i}-{j}" for i, j in flipped.arcs],
        }
        if args.json:
            _emit_json(payload)
        else:
            print(",".join(payload["arcs"]))
        return 0
    if args.action == "params":
        p = triangulation.parameters(t)
        if args.json:
            _emit_json(
                {"genus": p.genus, "boundaryComponents": p.boundary_components, "pairs": [list(x) for x in p.pairs]}
            )
        else:
            (n, d) = p.pairs[0]
            print(f"g={p.genus}, b={p.boundary_components}, (n,d)=({n},{d})")
        return 0
    if args.action == "ice":
        iq = triangulation.ice_quiver(t)
        rels = triangulation.frozen_relations(iq)
        payload = {
            "vertices": list(iq.vertices),
            "frozen": sorted(iq.frozen),
            "arrows": [{"name": n, "source": s, "target": tg} for n, s, tg in iq.arrows],
            "potential": [{"sign": sign, "cycle": list(c)} for sign, c in iq.potential],
            "relations": [{"lhs": list(l), "rhs": list(r)} for l, r in rels],
        }
        _emit_json(payload)
        return 0
    if args.action == "compare":
        report = triangulation.compare_frozen_vs_brauer(t)
        flips = triangulation.flip_is_kauer(t)
        payload = {
            "arrowDifference": [list(x) for x in report["difference"]],
            "differenceIsBoundaryAtTwoArcPoints": report["ok"],
            "flipMatchesKauerMove": {f"{a[0]}-{a[1]}": ok for a, ok in flips},
        }
        _emit_json(payload)
        return 0
    raise GraphError(f"unknown tri action {args.action!r}", "tri")


def cmd_serve(args) -> int:
    service.serve(args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bga", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("validate", cmd_validate, help="parse and validate a graph file")
    p.add_argument("file")
    p = add("surface", cmd_surface, help="faces and genus of the ribbon surface")
    p.add_argument("file")
    p = add("quiver", cmd_quiver, help="quiver of the Brauer graph algebra")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="emit DOT")
    p = add("relations", cmd_relations, help="relation ideal generators")
    p.add_argument("file")
    p.add_argument("--minimal", action="store_true")
    p = add("projectives", cmd_projectives, help="Loewy structure of the projectives")
    p.add_argument("file")
    p.add_argument("--edge")
    p = add("walks", cmd_walks, help="Green walks")
    p.add_argument("file")
    p.add_argument("--double", action="store_true", help="double-stepped walks")
    p = add("mutate", cmd_mutate, help="apply an edge slide")
    p.add_argument("file")
    p.add_argument("--edge", required=True)
    p.add_argument("--direction", choices=["plus", "minus"], default="plus")
    p.add_argument("-o", "--output")
    p = add("classify", cmd_classify, help="representation type and AR census")
    p.add_argument("file")
    p = add("resolve", cmd_resolve, help="projective resolution terms along the walk")
    p.add_argument("file")
    p.add_argument("--edge", required=True)
    p.add_argument("--terms", type=int, default=10)
    p.add_argument("--start-half")
    p = add("gentle", cmd_gentle, help="gentle presentation tools")
    p.add_argument("action", choices=["check", "graph"])
    p.add_argument("file")
    p = add("trivext", cmd_trivext, help="trivial extension of a gentle presentation")
    p.add_argument("file")
    p = add("cut", cmd_cut, help="admissible cuts of a multiplicity-one graph")
    p.add_argument("file")
    p.add_argument("--arrows")
    p.add_argument("--enumerate", action="store_true")
    p = add("tri", cmd_tri, help="polygon triangulation tools")
    p.add_argument("action", choices=["build", "flip", "ice", "params", "compare"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--arcs", default="")
    p.add_argument("--arc")
    p.add_argument("-o", "--output")
    p = add("serve", cmd_serve, help="run the local session service")
    p.add_argument("--port", type=int, default=8671)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except GraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
