from __future__ import annotations

import logging
from itertools import combinations

from brambles.services.bramble import Bramble
from decompositions.services.model import Decomposition
from families import exceptions
from graphs.services.graph import Cycle, Graph, GraphBuilder
from graphs.services.traversal import components, enumerate_connected_sets

logger = logging.getLogger(__name__)


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise exceptions.InvalidParameters(detail=f'A cycle needs at least 3 vertices, got {m}.')
    builder = GraphBuilder(f'C{m}')
    builder.add_path([*range(1, m + 1), 1])
    return builder.build()


def complete_graph(m: int) -> Graph:
    if m < 1:
        raise exceptions.InvalidParameters(detail=f'A complete graph needs a vertex, got {m}.')
    builder = GraphBuilder(f'K{m}')
    for v in range(1, m + 1):
        builder.add_vertex(v)
    for u, v in combinations(range(1, m + 1), 2):
        builder.add_edge(u, v)
    return builder.build()


# subdivided complete graphs

def branch_path(k: int, i: int, j: int) -> list[str]:
    """Labels of the subdivided edge from ``a_i`` to ``a_j``, both ends included."""
    if i > j:
        return branch_path(k, j, i)[::-1]
    return [f'a_{i}', *(f's_{i}_{j}_{m}' for m in range(1, k + 1)), f'a_{j}']


def subdivided_complete(n: int, k: int) -> Graph:
    """``K_n`` with every edge replaced by a path of length ``k + 1``."""
    if n < 3 or k < 0:
        raise exceptions.InvalidParameters(detail=f'subdivided_complete needs n >= 3 and k >= 0, got n={n}, k={k}.')
    builder = GraphBuilder(f'subdivided_complete({n},{k})')
    for i in range(1, n + 1):
        builder.add_vertex(f'a_{i}')
    for i, j in combinations(range(1, n + 1), 2):
        builder.add_path(branch_path(k, i, j))
    return builder.build()


def witness_width(n: int, k: int) -> int:
    return (n - 1) * (k + 1) - (k + 1) // 2


def subdivided_complete_witness(n: int, k: int) -> tuple[Graph, Decomposition]:
    """Connected decomposition of width ``(n-1)(k+1) - ⌊(k+1)/2⌋`` on a star.

    With ``a = a_1``, ``b = a_2`` and ``A⁻`` the other branch vertices, the
    centre holds every path from ``b`` into ``A⁻`` and the ``⌈(k+1)/2⌉``
    vertices of ``P_ba`` nearest ``b``; one leaf mirrors it around ``a``; one
    leaf per pair ``c, d`` of ``A⁻`` holds ``P_cd``. The star is rooted at
    its centre.
    """
    g = subdivided_complete(n, k)
    half = -(-(k + 1) // 2)
    rest = range(3, n + 1)

    centre = {label for c in rest for label in branch_path(k, 2, c)}
    centre |= set(branch_path(k, 2, 1)[1:half + 1])
    mirror = {label for c in rest for label in branch_path(k, 1, c)}
    mirror |= set(branch_path(k, 1, 2)[1:half + 1])

    bags = {0: centre, 1: mirror}
    for c, d in combinations(rest, 2):
        bags[len(bags)] = set(branch_path(k, c, d))
    d = Decomposition(g, {t: g.vertices_of(bag) for t, bag in bags.items()}, [(0, t) for t in bags if t], root=0)
    logger.debug(f'Witness for {g!r}: {len(bags)} nodes, width {witness_width(n, k)}')
    return g, d


def branch_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in g.vertices if g.label(v).startswith('a_'))


def lower_bound_component(g: Graph, separator: frozenset[int]) -> frozenset[int]:
    """The component of ``g - X`` that holds every branch vertex outside ``X``."""
    outside = branch_vertices(g) - separator
    for block in components(g, set(g.vertices) - separator):
        if outside <= block:
            return block
    raise exceptions.WitnessConstructionFailed(
        detail=f'Branch vertices outside {g.labels(separator)} are split by it.'
    )


def subdivided_complete_lower_bound_bramble(n: int, k: int) -> tuple[Graph, Bramble]:
    """Distinct components ``C(X)`` over all connected ``X`` with ``|X| <= r``.

    Exhaustive over connected sets, so only tiny parameters are practical.
    """
    g = subdivided_complete(n, k)
    r = witness_width(n, k)
    elements = dict.fromkeys(lower_bound_component(g, x) for x in enumerate_connected_sets(g, r))
    logger.info(f'{len(elements)} distinct components C(X) for {g!r}, |X| <= {r}')
    return g, Bramble(g, elements)


# subdivided grids

def subdivided_grid(n: int) -> Graph:
    """``n x n`` grid whose interior edges are subdivided once.

    Grid vertices are ``g_r_c``; the vertex on the edge right of ``g_r_c`` is
    ``h_r_c`` and the one below it is ``v_r_c``.
    """
    if n < 2:
        raise exceptions.InvalidParameters(detail=f'subdivided_grid needs n >= 2, got {n}.')
    builder = GraphBuilder(f'subdivided_grid({n})')
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            builder.add_vertex(f'g_{r}_{c}')
    for r in range(1, n + 1):
        for c in range(1, n):
            if r in (1, n):
                builder.add_edge(f'g_{r}_{c}', f'g_{r}_{c + 1}')
            else:
                builder.add_path([f'g_{r}_{c}', f'h_{r}_{c}', f'g_{r}_{c + 1}'])
    for c in range(1, n + 1):
        for r in range(1, n):
            if c in (1, n):
                builder.add_edge(f'g_{r}_{c}', f'g_{r + 1}_{c}')
            else:
                builder.add_path([f'g_{r}_{c}', f'v_{r}_{c}', f'g_{r + 1}_{c}'])
    return builder.build()


def grid_boundary_cycle(g: Graph, n: int) -> Cycle:
    """Boundary of :func:`subdivided_grid`, clockwise from the top-left corner."""
    cells = [(1, c) for c in range(1, n + 1)]
    cells += [(r, n) for r in range(2, n + 1)]
    cells += [(n, c) for c in range(n - 1, 0, -1)]
    cells += [(r, 1) for r in range(n - 1, 1, -1)]
    return Cycle(tuple(g.vertex(f'g_{r}_{c}') for r, c in cells))
