from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import networkx as nx
import numpy as np
from django.conf import settings

from brambles import exceptions
from cycles.services.cycle_space import enumerate_cycles_upto
from cycles.services.geodesic import is_geodesic_cycle
from decompositions.services.model import Decomposition
from graphs.exceptions import GraphDisconnected
from graphs.services.graph import Cycle, Graph, VertexSet
from graphs.services.traversal import enumerate_connected_sets, is_connected_set

logger = logging.getLogger(__name__)


class Bramble:
    """Vertex sets of one host graph, meant to be connected and pairwise touching."""

    def __init__(self, graph: Graph, elements: Iterable[Iterable[int]]):
        self.graph = graph
        self.elements: list[VertexSet] = [frozenset(e) for e in elements]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.elements)

    def __repr__(self) -> str:
        return f'<Bramble elements={len(self.elements)}>'

    def labels(self) -> list[list[str]]:
        return [self.graph.labels(e) for e in self.elements]


@dataclass(frozen=True)
class BrambleCheck:
    ok: bool
    element: int | None = None
    pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def touches(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    """Intersecting, or joined by an edge."""
    if a & b:
        return True
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    return any(g.neighbors(v) & large for v in small)


def is_bramble(g: Graph, b: Bramble) -> BrambleCheck:
    for i, element in enumerate(b):
        if not element or not is_connected_set(g, element):
            return BrambleCheck(False, element=i)
    for i, j in itertools.combinations(range(len(b)), 2):
        if not touches(g, b.elements[i], b.elements[j]):
            return BrambleCheck(False, pair=(i, j))
    return BrambleCheck(True)


def sample_pairs(count: int, size: int, seed: int) -> Iterator[tuple[int, int]]:
    """``count`` index pairs ``i < j`` drawn uniformly with a fixed seed."""
    if size < 2:
        return
    rng = np.random.default_rng(seed)
    for _ in range(count):
        i, j = sorted(rng.choice(size, size=2, replace=False).tolist())
        yield i, j


def is_bramble_sampled(g: Graph, elements: Sequence[VertexSet], count: int, seed: int | None = None) -> BrambleCheck:
    """Connectivity of every element, touching on ``count`` sampled pairs."""
    seed = settings.DEFAULT_SEED if seed is None else seed
    for i, element in enumerate(elements):
        if not element or not is_connected_set(g, element):
            return BrambleCheck(False, element=i)
    for i, j in sample_pairs(count, len(elements), seed):
        if not touches(g, elements[i], elements[j]):
            return BrambleCheck(False, pair=(i, j))
    return BrambleCheck(True)


def _guard(g: Graph) -> None:
    if g.order > settings.BRAMBLE_EXACT_LIMIT:
        raise exceptions.BrambleLimitExceeded(
            detail=f'{g.order} vertices exceed BRAMBLE_EXACT_LIMIT={settings.BRAMBLE_EXACT_LIMIT}.'
        )


def _hits(vertex_set: VertexSet, b: Bramble) -> bool:
    return all(vertex_set & element for element in b)


def order(g: Graph, b: Bramble) -> tuple[int, VertexSet]:
    """Smallest vertex set meeting every element, with a witness."""
    _guard(g)
    if not len(b):
        return 0, frozenset()
    for size in range(1, g.order + 1):
        for subset in itertools.combinations(g.vertices, size):
            if _hits(frozenset(subset), b):
                return size, frozenset(subset)
    raise exceptions.NotABramble(detail='A bramble element is empty.')


def connected_order(g: Graph, b: Bramble) -> tuple[int, VertexSet]:
    """Smallest connected vertex set meeting every element, with a witness."""
    _guard(g)
    if not len(b):
        return 0, frozenset()
    if g.order:
        for vertex_set in enumerate_connected_sets(g, g.order):
            if _hits(vertex_set, b):
                return len(vertex_set), vertex_set
    raise exceptions.NotABramble(detail='No connected set meets every element.')


def covering_part(g: Graph, d: Decomposition, b: Bramble) -> int:
    """A node whose bag meets every bramble element."""
    for t in d.nodes:
        if _hits(d.bag(t), b):
            return t
    raise exceptions.NoCoveringPart()


def arc_bramble(g: Graph, cycle: Cycle) -> Bramble:
    """All arcs of ``⌊m/2⌋`` consecutive vertices of an ``m``-cycle."""
    m = cycle.length
    return Bramble(g, dict.fromkeys(cycle.arc(start, m // 2) for start in range(m)))


def clique_bramble(g: Graph, clique: Iterable[int]) -> Bramble:
    return Bramble(g, [{v} for v in sorted(clique)])


def bramble_lower_bound(g: Graph) -> tuple[int, Bramble]:
    """Best connected order among arc brambles of geodesic cycles and a maximum clique."""
    _guard(g)
    if not g.order:
        return 0, Bramble(g, [])
    clique = max(nx.find_cliques(g.to_networkx()), key=lambda c: (len(c), sorted(c)))
    best = clique_bramble(g, clique)
    best_order = len(clique)
    for cycle in enumerate_cycles_upto(g, g.order):
        if cycle.length < 4 or not is_geodesic_cycle(g, cycle):
            continue
        candidate = arc_bramble(g, cycle)
        value, _ = connected_order(g, candidate)
        if value > best_order:
            best, best_order = candidate, value
    logger.debug(f'Bramble lower bound for {g!r}: connected order {best_order}')
    return best_order, best


def smallest_connected_superset(g: Graph, vertices: Iterable[int]) -> VertexSet:
    """Smallest connected vertex set containing ``vertices`` (exhaustive, layer by layer)."""
    start = frozenset(vertices)
    if is_connected_set(g, start):
        return start
    _guard(g)
    layer = {start}
    while layer:
        grown = set()
        for vertex_set in sorted(layer, key=sorted):
            for w in sorted(g.neighborhood(vertex_set)):
                candidate = vertex_set | {w}
                if is_connected_set(g, candidate):
                    return candidate
                grown.add(candidate)
        layer = grown
    raise GraphDisconnected(detail='Vertices lie in different components of the graph.')


def locality_bound(cbn: int) -> int:
    return 2 * (cbn - 1) * (cbn - 2)
