from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Iterator, Sequence

import networkx as nx
import numpy as np

from graphs.services.graph import Graph, Path, VertexSet

logger = logging.getLogger(__name__)


def components(g: Graph, within: Iterable[int]) -> list[VertexSet]:
    """Connected components of ``g[within]``, ordered by their smallest vertex."""
    remaining = set(within)
    blocks = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        remaining.discard(start)
        block = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w in remaining:
                    remaining.discard(w)
                    block.add(w)
                    queue.append(w)
        blocks.append(frozenset(block))
    return blocks


def is_connected_set(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff ``g[vertices]`` is connected; the empty set counts as connected."""
    return len(components(g, vertices)) <= 1


def is_connected(g: Graph) -> bool:
    return is_connected_set(g, g.vertices)


def connected_component_graphs(g: Graph) -> list[Graph]:
    """One induced subgraph per component; vertex labels identify the originals."""
    return [g.subgraph(block) for block in components(g, g.vertices)]


def shortest_path_between_components(
        g: Graph,
        allowed: Iterable[int],
        blocks: Sequence[Iterable[int]],
) -> Path | None:
    """Shortest path in ``g[allowed]`` joining two distinct blocks.

    Internal vertices avoid every block. Among all shortest candidates the
    lexicographically smallest vertex sequence is returned.
    """
    allowed = frozenset(allowed)
    blocks = [frozenset(block) & allowed for block in blocks]
    owner = {v: i for i, block in enumerate(blocks) for v in block}
    free = allowed - owner.keys()

    best_length = None
    best_start = None
    best_distances = None
    for i, block in enumerate(blocks):
        if not block:
            continue
        distances = _distances_to_other_blocks(g, free, owner, i)
        for start in sorted(block):
            steps = [distances[w] for w in g.neighbors(start) if w in distances]
            if not steps:
                continue
            length = min(steps) + 1
            if best_length is None or (length, start) < (best_length, best_start):
                best_length, best_start, best_distances = length, start, distances

    if best_length is None:
        return None

    path = [best_start]
    remaining = best_length
    while remaining:
        remaining -= 1
        current = path[-1]
        path.append(min(w for w in g.neighbors(current) if best_distances.get(w) == remaining))
    return Path(tuple(path))


def _distances_to_other_blocks(g: Graph, free: VertexSet, owner: dict[int, int], block: int) -> dict[int, int]:
    # multi-source BFS from every vertex outside `block`, moving through free vertices only
    distances = {v: 0 for v, i in owner.items() if i != block}
    queue = deque(distances)
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w in free and w not in distances:
                distances[w] = distances[v] + 1
                queue.append(w)
    return distances


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Hop-count distance matrix, ``inf`` for pairs in different components."""
    matrix = np.full((g.order, g.order), np.inf)
    for source, lengths in nx.all_pairs_shortest_path_length(g.to_networkx()):
        for target, length in lengths.items():
            matrix[source, target] = length
    return matrix


def enumerate_connected_sets(g: Graph, max_size: int) -> Iterator[VertexSet]:
    """Yield every connected vertex set with at most ``max_size`` vertices.

    Sets come in nondecreasing size, each exactly once. The number of sets is
    exponential in ``max_size``; callers guard the graph size.
    """
    if max_size < 1:
        raise ValueError('max_size must be positive.')
    layer = [frozenset([v]) for v in g.vertices]
    size = 1
    while layer:
        yield from layer
        if size == max_size:
            return
        grown = set()
        for vertex_set in layer:
            for w in g.neighborhood(vertex_set):
                grown.add(vertex_set | {w})
        layer = sorted(grown, key=sorted)
        size += 1
        logger.debug(f'{len(layer)} connected sets of size {size}')
