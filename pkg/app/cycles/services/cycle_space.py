from __future__ import annotations

import logging
from collections.abc import Iterator

import networkx as nx
from django.conf import settings

from cycles import exceptions
from graphs.services.graph import Cycle, Graph
from graphs.services.traversal import components

logger = logging.getLogger(__name__)

EdgeVector = int


class EdgeIndex:
    """Fixed enumeration of the edges of ``g``; edge ``i`` is bit ``i`` of an :data:`EdgeVector`."""

    def __init__(self, g: Graph):
        self.graph = g
        self._bits = {edge: i for i, edge in enumerate(g.edges)}

    def __len__(self) -> int:
        return len(self._bits)

    def vector(self, cycle: Cycle) -> EdgeVector:
        vector = 0
        for u, v in cycle.edges():
            vector ^= 1 << self._bits[(min(u, v), max(u, v))]
        return vector

    def is_even(self, vector: EdgeVector) -> bool:
        """Every vertex meets an even number of edges of ``vector``."""
        degree = [0] * self.graph.order
        for (u, v), i in self._bits.items():
            if vector >> i & 1:
                degree[u] += 1
                degree[v] += 1
        return all(d % 2 == 0 for d in degree)


class CycleBasis:
    """Independent cycles kept in echelon form, one pivot row per lowest set bit."""

    def __init__(self, index: EdgeIndex):
        self.index = index
        self.cycles: list[Cycle] = []
        self.pivots: dict[int, EdgeVector] = {}

    def __len__(self) -> int:
        return len(self.cycles)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vector: EdgeVector) -> EdgeVector:
        while vector:
            pivot = vector & -vector
            row = self.pivots.get(pivot)
            if row is None:
                break
            vector ^= row
        return vector

    def add(self, cycle: Cycle) -> bool:
        """Keep ``cycle`` if it is independent of the basis so far."""
        reduced = self.reduce(self.index.vector(cycle))
        if not reduced:
            return False
        self.pivots[reduced & -reduced] = reduced
        self.cycles.append(cycle)
        return True


def cyclomatic_number(g: Graph) -> int:
    return g.edge_count - g.order + len(components(g, g.vertices))


def enumerate_cycles_upto(g: Graph, l: int) -> Iterator[Cycle]:
    """Every simple cycle of length at most ``l`` once, shortest first.

    Cycles come in canonical form. The search is a depth-bounded walk from
    each start vertex through larger vertices only, so its cost grows
    exponentially with ``l``.
    """
    for length in range(3, min(l, g.order) + 1):
        yield from _cycles_of_length(g, length)


def _cycles_of_length(g: Graph, length: int) -> Iterator[Cycle]:
    for start in g.vertices:
        yield from _extend(g, start, [start], {start}, length)


def _extend(g: Graph, start: int, path: list[int], on_path: set[int], length: int) -> Iterator[Cycle]:
    tail = path[-1]
    if len(path) == length:
        if g.has_edge(tail, start) and path[1] < tail:
            yield Cycle(tuple(path))
        return
    for w in sorted(g.neighbors(tail)):
        if w > start and w not in on_path:
            path.append(w)
            on_path.add(w)
            yield from _extend(g, start, path, on_path, length)
            path.pop()
            on_path.remove(w)


def rank_profile(g: Graph, l: int) -> int:
    """Rank of the cycles of length at most ``l`` in the cycle space."""
    basis = CycleBasis(EdgeIndex(g))
    for cycle in enumerate_cycles_upto(g, l):
        basis.add(cycle)
    return basis.rank


def ell(g: Graph) -> int:
    """Smallest ``l`` whose cycles of length at most ``l`` span the cycle space."""
    target = cyclomatic_number(g)
    if target == 0:
        raise exceptions.NoCycle()

    limit = settings.CYCLE_LENGTH_LIMIT or g.order
    basis = CycleBasis(EdgeIndex(g))
    for length in range(3, g.order + 1):
        if length > limit:
            raise exceptions.SearchLimitExceeded(
                detail=f'Cycles of length {length} exceed CYCLE_LENGTH_LIMIT={settings.CYCLE_LENGTH_LIMIT}.'
            )
        for cycle in _cycles_of_length(g, length):
            basis.add(cycle)
            if basis.rank == target:
                logger.info(f'ell({g!r}) = {length} (cyclomatic number {target})')
                return length
    raise exceptions.CycleSpaceIncomplete(detail=f'Cycles of {g!r} span rank {basis.rank} < {target}.')


def ell_via_min_basis(g: Graph) -> int:
    """Longest cycle of a minimum cycle basis built greedily from Horton candidates.

    Candidates are the cycles closed by one edge ``xy`` over the breadth-first
    tree paths from a vertex ``v`` to ``x`` and ``y`` that meet only in ``v``.
    """
    target = cyclomatic_number(g)
    if target == 0:
        raise exceptions.NoCycle()

    index = EdgeIndex(g)
    candidates = {}
    graph = g.to_networkx()
    for v in g.vertices:
        paths = nx.single_source_shortest_path(graph, v)
        for x, y in g.edges:
            if x not in paths or y not in paths:
                continue
            to_x, to_y = paths[x], paths[y]
            if len(to_x) + len(to_y) < 4 or set(to_x) & set(to_y) != {v}:
                continue
            cycle = Cycle(tuple(to_x) + tuple(reversed(to_y[1:])))
            candidates.setdefault(index.vector(cycle), cycle)

    basis = CycleBasis(index)
    longest = 0
    for cycle in sorted(candidates.values(), key=lambda c: (c.length, c.canonical().vertices)):
        if basis.add(cycle):
            longest = cycle.length
            if basis.rank == target:
                return longest
    raise exceptions.CycleSpaceIncomplete(detail=f'Horton candidates of {g!r} span rank {basis.rank} < {target}.')
