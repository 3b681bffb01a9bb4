from __future__ import annotations

from graphs import exceptions
from graphs.services.graph import Graph, GraphBuilder


def parse_edge_list(text: bytes | str, name: str = '') -> Graph:
    """Read a graph from edge-list text.

    One edge per line as two whitespace-separated vertex tokens; blank lines
    and lines starting with ``#`` are skipped. Tokens become vertex labels and
    receive dense ids in order of first appearance. Repeated edges are merged.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')
        except UnicodeDecodeError as e:
            raise exceptions.EdgeListEncodingError(text[:e.start].count(b'\n') + 1)

    builder = GraphBuilder(name=name)
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise exceptions.EdgeListSyntaxError(line_number, raw)
        a, b = tokens
        if a == b:
            raise exceptions.SelfLoopError(line_number, a)
        builder.add_edge(a, b)
    return builder.build()


def format_edge_list(g: Graph) -> str:
    header = f'# {g.name}\n' if g.name else ''
    body = ''.join(f'{g.label(u)} {g.label(v)}\n' for u, v in g.edges)
    return header + body
