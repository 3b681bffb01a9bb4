from __future__ import annotations

import logging
from collections.abc import Iterator

from brambles.services.bramble import Bramble
from decompositions.services.model import Decomposition
from families import exceptions
from graphs.services.graph import Cycle, Graph, GraphBuilder, VertexSet

logger = logging.getLogger(__name__)

SIDES = (0, 1, 2)


def _check(n: int) -> None:
    if n < 4:
        raise exceptions.InvalidParameters(detail=f'duality_graph needs n >= 4, got {n}.')


def connection_path(n: int, i: int, j: int, k: int) -> list[str]:
    """Labels of ``P^i_{j,k}`` from ``x^i_j`` to ``y_k``; length ``n`` when ``k = n + j``, else ``5n``."""
    length = n if k == n + j else 5 * n
    return [f'x{i}_{j}', *(f'p{i}_{j}_{k}_{m}' for m in range(1, length)), f'y_{k}']


def cycle_labels(n: int) -> list[str]:
    """The long cycle from ``a``: ``c_1 .. c_8n``, ``b``, ``c_(8n+2) .. c_(16n+1)``.

    ``c_m`` sits at distance ``m`` from ``a`` along the first arc.
    """
    first = [f'c_{m}' for m in range(1, 8 * n + 1)]
    second = [f'c_{m}' for m in range(8 * n + 2, 16 * n + 2)]
    return ['a', *first, 'b', *second]


def arc_labels(n: int, side: int) -> list[str]:
    """Arc ``S^side`` of the long cycle ordered from ``a`` towards ``b``."""
    if side == 1:
        return [f'c_{m}' for m in range(1, 8 * n + 1)]
    return [f'c_{m}' for m in range(16 * n + 1, 8 * n + 1, -1)]


def duality_graph(n: int) -> Graph:
    """Three paths ``P_i``, a path ``Q``, their connecting paths and a long cycle through ``a`` and ``b``."""
    _check(n)
    builder = GraphBuilder(f'duality({n})')
    for i in SIDES:
        builder.add_path([f'x{i}_{j}' for j in range(1, 2 * n + 1)])
    builder.add_path([f'y_{k}' for k in range(1, 4 * n + 1)])
    for i in SIDES:
        for j in range(1, 2 * n + 1):
            for k in range(1, 4 * n + 1):
                builder.add_path(connection_path(n, i, j, k))
    around = cycle_labels(n)
    builder.add_path([*around, around[0]])
    builder.add_edge('a', 'x0_1')
    builder.add_edge('a', 'y_1')
    builder.add_edge('b', f'x0_{2 * n}')
    builder.add_edge('b', f'y_{4 * n}')
    g = builder.build()
    logger.debug(f'{g!r}: {g.order} vertices, {g.edge_count} edges')
    return g


def duality_cycle(g: Graph, n: int) -> Cycle:
    """``a``, the first arc, ``b``, then ``Q`` back to ``a``; length ``12n + 2``."""
    labels = ['a', *arc_labels(n, 1), 'b', *(f'y_{k}' for k in range(4 * n, 0, -1))]
    return Cycle(tuple(g.vertex(label) for label in labels))


def duality_witness(g: Graph, n: int) -> tuple[Decomposition, dict[int, VertexSet]]:
    """Decomposition whose every bag lies in an emitted connected set of at most ``5n + 3`` vertices.

    The root holds ``Q`` with ``a`` and ``b``. Per side ``i`` a chain adds
    ``x^i_j, x^i_(j+1)``, and each connecting path hangs as a leaf off the
    chain node holding its ``x`` end. Per arc, one node holds ``a``, ``b`` and
    the ``3n`` arc vertices nearest ``a``; its child holds ``b`` and the
    ``5n + 1`` arc vertices nearest ``b``. The two share the arc vertex at
    distance ``3n`` from ``a``.
    """
    _check(n)
    q = [f'y_{k}' for k in range(1, 4 * n + 1)]
    bags: dict[int, set[str]] = {}
    supersets: dict[int, set[str]] = {}
    edges = []

    def add(bag, superset, parent=None):
        t = len(bags)
        bags[t] = set(bag)
        supersets[t] = set(superset)
        if parent is not None:
            edges.append((parent, t))
        return t

    root_bag = {*q, 'a', 'b'}
    root = add(root_bag, root_bag)

    for i in SIDES:
        parent = root
        chain = {}
        for j in range(1, 2 * n):
            bag = root_bag | {f'x{i}_{j}', f'x{i}_{j + 1}'}
            short = connection_path(n, i, j, n + j)
            parent = chain[j] = add(bag, bag | set(short), parent)
        for j in range(1, 2 * n + 1):
            host = chain[min(j, 2 * n - 1)]
            for k in range(1, 4 * n + 1):
                path = connection_path(n, i, j, k)
                add(path, path, host)

    p0 = [f'x0_{j}' for j in range(1, 2 * n + 1)]
    for side in (1, 2):
        arc = arc_labels(n, side)
        near_a = {'a', 'b', *arc[:3 * n]}
        near_b = {'b', *arc[3 * n - 1:]}
        s0 = add(near_a, near_a | set(p0), root)
        add(near_b, near_b, s0)

    d = Decomposition(g, {t: g.vertices_of(bag) for t, bag in bags.items()}, edges, root=root)
    return d, {t: g.vertices_of(superset) for t, superset in supersets.items()}


def duality_b1(g: Graph, n: int) -> Iterator[VertexSet]:
    """Streams ``B^i_(j,k)``: ``x^i_j``, the insides of its connecting paths, and ``y_k``."""
    for i in SIDES:
        for j in range(1, 2 * n + 1):
            star = {f'x{i}_{j}'}
            for k in range(1, 4 * n + 1):
                star.update(connection_path(n, i, j, k)[1:-1])
            star_ids = g.vertices_of(star)
            for k in range(1, 4 * n + 1):
                yield star_ids | {g.vertex(f'y_{k}')}


def duality_brambles(g: Graph, n: int) -> tuple[Iterator[VertexSet], Bramble]:
    """``B1`` as a stream and ``B2``, all ``6n + 2``-vertex segments of the short cycle."""
    _check(n)
    cycle = duality_cycle(g, n)
    b2 = Bramble(g, [cycle.arc(start, 6 * n + 2) for start in range(cycle.length)])
    return duality_b1(g, n), b2
