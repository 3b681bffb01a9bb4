from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterable, Sequence

import networkx as nx
from django.conf import settings
from networkx.algorithms.approximation import treewidth_min_fill_in

from decompositions import exceptions
from decompositions.services.model import Decomposition, simplify, width
from graphs.services.graph import Graph
from graphs.services.traversal import components

logger = logging.getLogger(__name__)

Adjacency = dict[int, set[int]]
BagCost = Callable[[int], int]


def exact_treewidth(g: Graph) -> tuple[int, Decomposition]:
    """Tree-width of ``g`` together with a decomposition of that width.

    Simplicial and almost-simplicial vertices are eliminated first; they never
    change the tree-width beyond the running low bound. What remains (the
    kernel) must fit ``TREEWIDTH_EXACT_LIMIT`` and is solved by a threshold
    dynamic program over vertex subsets, unless the minor-min-width lower
    bound already meets the min-fill upper bound.
    """
    adjacency, reduced, low = _reduce(g)
    kernel = sorted(adjacency)
    if len(kernel) > settings.TREEWIDTH_EXACT_LIMIT:
        raise exceptions.SolverLimitExceeded(
            detail=f'Kernel of {len(kernel)} vertices exceeds TREEWIDTH_EXACT_LIMIT='
                   f'{settings.TREEWIDTH_EXACT_LIMIT}; run the min-fill heuristic instead.'
        )

    bags, edges = {}, []
    if kernel:
        upper, tree = treewidth_min_fill_in(_as_networkx(adjacency))
        lower = max(low, _minor_min_width(adjacency))
        logger.debug(f'Kernel of {len(kernel)} vertices: lower bound {lower}, min-fill {upper}')
        order = None
        if lower < upper:
            masks = _masks(adjacency, kernel)
            for k in range(lower, upper):
                order = elimination_search(masks, k, treewidth_cost)
                if order is not None:
                    break
        if order is None:
            bags, edges = _bags_from_networkx(tree)
        else:
            bags, edges = _bags_from_ordering(adjacency, [kernel[i] for i in order])

    bags, edges = _attach_reduced(bags, edges, reduced)
    d = simplify(Decomposition(g, bags, edges))
    k = width(d) if d.nodes else -1
    logger.info(f'Exact tree-width of {g!r}: {k} ({len(reduced)} vertices reduced, kernel {len(kernel)})')
    return k, d


def minfill_decomposition(g: Graph) -> Decomposition:
    """Min-fill elimination heuristic; valid, no optimality guarantee."""
    _, tree = treewidth_min_fill_in(g.to_networkx())
    bags, edges = _bags_from_networkx(tree)
    return Decomposition(g, bags, edges)


def decomposition_from_ordering(g: Graph, order: Sequence[int]) -> Decomposition:
    """Decomposition whose bags are the vertices with their later neighbours in the filled graph."""
    adjacency = {v: set(g.neighbors(v)) for v in g.vertices}
    bags, edges = _bags_from_ordering(adjacency, order)
    return Decomposition(g, bags, edges)


def minor_min_width(g: Graph) -> int:
    return _minor_min_width({v: set(g.neighbors(v)) for v in g.vertices})


def treewidth_branch_and_bound(g: Graph) -> int:
    """Depth-first branch and bound over elimination orders.

    Independent of :func:`exact_treewidth`; simplicial vertices are eliminated
    greedily and the minor-min-width bound prunes partial orders.
    """
    if g.order > settings.TREEWIDTH_BRANCH_AND_BOUND_LIMIT:
        raise exceptions.SolverLimitExceeded(
            detail=f'{g.order} vertices exceed TREEWIDTH_BRANCH_AND_BOUND_LIMIT={settings.TREEWIDTH_BRANCH_AND_BOUND_LIMIT}.'
        )
    best = treewidth_min_fill_in(g.to_networkx())[0] if g.order else -1
    seen: dict[frozenset[int], int] = {}

    def search(graph: Adjacency, reached: int):
        nonlocal best
        if reached >= best:
            return
        if len(graph) - 1 <= reached:
            best = reached
            return
        if _minor_min_width(graph) >= best:
            return
        key = frozenset(graph)
        if seen.get(key, math.inf) <= reached:
            return
        seen[key] = reached

        candidates = sorted(graph)
        for v in candidates:
            if _is_clique(graph, graph[v]):
                candidates = [v]
                break
        for v in candidates:
            child = {u: set(nbrs) for u, nbrs in graph.items()}
            _eliminate(child, v)
            search(child, max(reached, len(graph[v])))

    search({v: set(g.neighbors(v)) for v in g.vertices}, 0)
    return best


# elimination search over vertex subsets

def treewidth_cost(bag: int) -> int:
    return bag.bit_count() - 1


def elimination_search(masks: Sequence[int], k: int, bag_cost: BagCost) -> list[int] | None:
    """Elimination ordering whose every bag costs at most ``k``, or None.

    ``masks[i]`` is the neighbourhood bitmask of vertex ``i``. Eliminating ``v``
    after the set ``S`` creates the bag of ``v`` and the vertices outside ``S``
    reachable from ``v`` through ``S``. States are the eliminated sets, explored
    layer by layer; ``bag_cost`` must be monotone under inclusion.
    """
    n = len(masks)
    full = (1 << n) - 1
    parents: dict[int, tuple[int, int] | None] = {0: None}
    layer = [0]
    while layer:
        next_layer = []
        for eliminated in layer:
            rest = full & ~eliminated
            if bag_cost(rest) <= k:
                prefix = _replay(parents, eliminated)
                return prefix + [i for i in range(n) if rest >> i & 1]
            pending = rest
            while pending:
                low = pending & -pending
                pending ^= low
                grown = eliminated | low
                if grown in parents:
                    continue
                v = low.bit_length() - 1
                if bag_cost(_elimination_bag(masks, eliminated, v)) <= k:
                    parents[grown] = (eliminated, v)
                    next_layer.append(grown)
        layer = next_layer
    return None


def _elimination_bag(masks: Sequence[int], eliminated: int, v: int) -> int:
    seen = 1 << v
    frontier = seen
    reach = 0
    while frontier:
        neighbours = 0
        pending = frontier
        while pending:
            low = pending & -pending
            pending ^= low
            neighbours |= masks[low.bit_length() - 1]
        reach |= neighbours
        frontier = neighbours & eliminated & ~seen
        seen |= frontier
    return (reach & ~eliminated) | (1 << v)


def _replay(parents: dict[int, tuple[int, int] | None], state: int) -> list[int]:
    order = []
    while parents[state] is not None:
        state, v = parents[state]
        order.append(v)
    return order[::-1]


def _masks(adjacency: Adjacency, vertices: Sequence[int]) -> list[int]:
    index = {v: i for i, v in enumerate(vertices)}
    return [sum(1 << index[w] for w in adjacency[v]) for v in vertices]


# reductions and assembly

def _reduce(g: Graph) -> tuple[Adjacency, list[tuple[int, frozenset[int]]], int]:
    adjacency = {v: set(g.neighbors(v)) for v in g.vertices}
    cyclomatic = g.edge_count - g.order + len(components(g, g.vertices))
    low = 2 if cyclomatic > 0 else int(g.edge_count > 0)
    reduced = []

    changed = True
    while changed:
        changed = False
        for v in sorted(adjacency):
            nbrs = adjacency[v]
            if _is_clique(adjacency, nbrs):
                low = max(low, len(nbrs))
            elif not (len(nbrs) <= low and _is_almost_clique(adjacency, nbrs)):
                continue
            reduced.append((v, frozenset(nbrs)))
            _eliminate(adjacency, v)
            changed = True
    return adjacency, reduced, low


def _attach_reduced(bags: dict, edges: list, reduced: list[tuple[int, frozenset[int]]]):
    bags, edges = dict(bags), list(edges)
    next_id = max(bags, default=-1) + 1
    for v, nbrs in reversed(reduced):
        # nbrs was a clique when v left, so some bag already holds it
        host = next((t for t in sorted(bags) if nbrs <= bags[t]), None)
        if host is None and bags:
            raise exceptions.SolverInvariantBroken(detail=f'No bag covers the neighbourhood of reduced vertex {v}.')
        bags[next_id] = nbrs | {v}
        if host is not None:
            edges.append((host, next_id))
        next_id += 1
    return bags, edges


def _bags_from_ordering(adjacency: Adjacency, order: Iterable[int]):
    adjacency = {v: set(nbrs) for v, nbrs in adjacency.items()}
    order = list(order)
    position = {v: i for i, v in enumerate(order)}
    bags, parents = {}, {}
    for v in order:
        later = set(adjacency[v])
        bags[v] = later | {v}
        parents[v] = min(later, key=position.__getitem__) if later else None
        _eliminate(adjacency, v)
    roots = [v for v in order if parents[v] is None]
    edges = [(v, p) for v, p in parents.items() if p is not None]
    edges += [(r, roots[-1]) for r in roots[:-1]]
    return bags, edges


def _bags_from_networkx(tree: nx.Graph):
    ordered = sorted(tree.nodes, key=lambda bag: (sorted(bag), len(bag)))
    ids = {bag: i for i, bag in enumerate(ordered)}
    bags = {ids[bag]: set(bag) for bag in ordered}
    edges = [(ids[a], ids[b]) for a, b in tree.edges]
    return bags, edges


def _as_networkx(adjacency: Adjacency) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(adjacency)
    graph.add_edges_from((v, w) for v, nbrs in adjacency.items() for w in nbrs)
    return graph


def _eliminate(adjacency: Adjacency, v: int) -> None:
    nbrs = adjacency.pop(v)
    for u in nbrs:
        adjacency[u].discard(v)
        adjacency[u] |= nbrs - {u}


def _is_clique(adjacency: Adjacency, vertices: set[int]) -> bool:
    return all(vertices - {u} <= adjacency[u] for u in vertices)


def _is_almost_clique(adjacency: Adjacency, vertices: set[int]) -> bool:
    return any(_is_clique(adjacency, vertices - {u}) for u in vertices)


def _minor_min_width(adjacency: Adjacency) -> int:
    graph = {v: set(nbrs) for v, nbrs in adjacency.items()}
    best = 0
    while graph:
        degree, v = min((len(nbrs), v) for v, nbrs in graph.items())
        best = max(best, degree)
        nbrs = graph.pop(v)
        if not nbrs:
            continue
        _, u = min((len(graph[w] & nbrs), w) for w in nbrs)
        for w in nbrs:
            graph[w].discard(v)
        for w in nbrs - {u}:
            graph[w].add(u)
            graph[u].add(w)
    return best
