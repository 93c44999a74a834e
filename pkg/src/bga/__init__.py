"""Brauer graph algebras from half-edge ribbon graphs: presentations,
projectives, Green walks, edge mutation, gentle-algebra counterparts,
triangulations and AR-component classification."""

from .ribbon import BrauerGraph, GraphError, faces, isomorphic, parse_graph, serialize_graph

__all__ = [
    "BrauerGraph",
    "GraphError",
    "faces",
    "isomorphic",
    "parse_graph",
    "serialize_graph",
]
