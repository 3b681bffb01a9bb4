from __future__ import annotations

import logging

from decompositions import exceptions
from decompositions.services.model import Decomposition, disconnection_defect, simplify, validate
from graphs.exceptions import GraphDisconnected
from graphs.services.graph import Graph
from graphs.services.traversal import components, is_connected, is_connected_set

logger = logging.getLogger(__name__)


def stabilize(g: Graph, d: Decomposition) -> Decomposition:
    """Turn a valid decomposition of a connected graph into a stable one.

    While some tree edge ``ts`` has a disconnected union on the ``s`` side, the
    subtree behind ``s`` is replaced by one copy per component of that union,
    each restricted to its component and attached to ``t``. The side with the
    fewest tree nodes is split first; then every split lowers the
    disconnection defect by at least one. Width never grows. The result is
    unrooted and simplified.
    """
    if not is_connected(g):
        raise GraphDisconnected(detail='stabilize() needs a connected graph; split it into components first.')
    if not validate(g, d):
        raise exceptions.InvalidDecomposition()

    current = simplify(Decomposition(g, d.bags, d.edges))
    defect = disconnection_defect(g, current)
    cap = max(defect, g.order * len(d.edges), 1)
    splits = 0

    while (violation := smallest_violation(g, current)) is not None:
        if splits >= cap:
            logger.error(f'Stabilisation of {g!r} hit its cap of {cap} splits')
            raise exceptions.StabilizationDiverged(
                detail=f'No stable decomposition after {splits} splits (initial defect {defect}).'
            )
        t, s = violation
        current = simplify(split_side(g, current, t, s))
        splits += 1
        logger.debug(f'Split the side of node {s} behind node {t}; tree has {len(current.nodes)} nodes')

    logger.info(f'Stabilised {g!r}: initial defect {defect}, {splits} splits')
    return current


def smallest_violation(g: Graph, d: Decomposition) -> tuple[int, int] | None:
    """Oriented tree edge ``(t, s)`` with a disconnected ``s`` side of fewest nodes."""
    best = None
    for a, b in d.edges:
        for t, s in ((a, b), (b, a)):
            side = d.side(t, s)
            if best is not None and len(side) >= best[0]:
                continue
            if not is_connected_set(g, d.union(side)):
                best = (len(side), t, s)
    return None if best is None else best[1:]


def split_side(g: Graph, d: Decomposition, t: int, s: int) -> Decomposition:
    """Replace the subtree behind ``s`` (seen from ``t``) by one copy per component of its union."""
    side = d.side(t, s)
    blocks = components(g, d.union(side))

    bags = {u: bag for u, bag in d.bags.items() if u not in side}
    edges = [(a, b) for a, b in d.edges if a not in side and b not in side]
    next_id = max(d.nodes) + 1
    for block in blocks:
        ids = {}
        for u in sorted(side):
            ids[u] = next_id
            bags[next_id] = d.bag(u) & block
            next_id += 1
        edges += [(ids[a], ids[b]) for a, b in d.edges if a in side and b in side]
        edges.append((t, ids[s]))
    return Decomposition(g, bags, edges)
