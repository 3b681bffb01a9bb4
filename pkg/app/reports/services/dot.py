from __future__ import annotations

from collections.abc import Iterable

from django.template.loader import render_to_string

from decompositions.services.model import Decomposition
from graphs.services.graph import Graph

HIGHLIGHT = '#f4c542'

Overlay = Iterable[tuple[int, Iterable[int]]]


def render_decomposition(d: Decomposition, overlay: Overlay = ()) -> str:
    """The tree with bags as node labels; vertices added by a trace are marked at their node."""
    g = d.graph
    added: dict[int, set[int]] = {}
    for t, vertices in overlay:
        added.setdefault(t, set()).update(vertices)
    nodes = [
        {
            'id': t,
            'bag': g.labels(d.bag(t)),
            'added': g.labels(added.get(t, set()) & d.bag(t)),
            'root': t == d.root,
        }
        for t in d.nodes
    ]
    return render_to_string('reports/decomposition.dot', {
        'name': g.name or g.fingerprint,
        'nodes': nodes,
        'edges': d.edges,
        'highlight': HIGHLIGHT,
    })


def render_graph(g: Graph, highlighted: Iterable[int] = ()) -> str:
    marked = set(highlighted)
    return render_to_string('reports/graph.dot', {
        'name': g.name or g.fingerprint,
        'vertices': [{'label': g.label(v), 'highlighted': v in marked} for v in g.vertices],
        'edges': [(g.label(u), g.label(v)) for u, v in g.edges],
        'highlight': HIGHLIGHT,
    })
