from __future__ import annotations

import logging
from dataclasses import dataclass

from django.conf import settings

from brambles import exceptions
from brambles.services.bramble import Bramble, bramble_lower_bound, connected_order, smallest_connected_superset
from cycles.services.cycle_space import ell
from decompositions.services.connectify import ConstructionState, process_node
from decompositions.services.model import Decomposition, reroot
from decompositions.services.stabilize import stabilize
from decompositions.services.treewidth import elimination_search, exact_treewidth
from graphs.exceptions import GraphDisconnected
from graphs.services.graph import Graph, VertexSet
from graphs.services.traversal import is_connected

logger = logging.getLogger(__name__)


@dataclass
class WctwBound:
    value: int
    decomposition: Decomposition
    supersets: dict[int, VertexSet]


def wctw_upper(g: Graph) -> WctwBound:
    """Weak connected tree-width bound from a stable minimum-width decomposition.

    For every node ``t`` the tree is rooted at ``t`` and only the root is
    processed; the resulting root bag is a connected superset of ``V_t`` with
    at most ``⌊ℓ/2⌋(|V_t| - 1) + 1`` vertices.
    """
    if not is_connected(g):
        raise GraphDisconnected(detail='wctw_upper() needs a connected graph.')
    half = ell(g) // 2
    _, seed = exact_treewidth(g)
    d = stabilize(g, seed)

    supersets = {}
    for t in d.nodes:
        state = ConstructionState(g, reroot(d, t))
        process_node(state, t, strict=False)
        superset = state.working.bag(t)
        bound = half * (len(d.bag(t)) - 1) + 1
        if len(superset) > bound:
            logger.error(f'Root bag of node {t} in {g!r} has {len(superset)} vertices, bound {bound}')
            raise exceptions.BoundViolated(detail=f'Connected superset of node {t} exceeds {bound} vertices.')
        supersets[t] = superset

    value = max(len(s) for s in supersets.values()) - 1
    logger.info(f'wctw({g!r}) <= {value}')
    return WctwBound(value, d, supersets)


def wctw_exact_small(g: Graph) -> int:
    """Exact weak connected tree-width of a small connected graph with a cycle.

    Matching bramble and upper bounds end the search early. Otherwise the
    elimination search runs with bag cost "smallest connected superset - 1",
    which is monotone, so elimination orderings reach the optimum.
    """
    if g.order > settings.WCTW_EXACT_LIMIT:
        raise exceptions.BrambleLimitExceeded(
            detail=f'{g.order} vertices exceed WCTW_EXACT_LIMIT={settings.WCTW_EXACT_LIMIT}.'
        )
    upper = wctw_upper(g).value
    cbn, _ = bramble_lower_bound(g)
    lower = cbn - 1
    if lower >= upper:
        logger.debug(f'Bramble of connected order {cbn} meets the upper bound {upper}')
        return upper

    masks = [sum(1 << w for w in g.neighbors(v)) for v in g.vertices]
    cache: dict[int, int] = {}

    def bag_cost(bag: int) -> int:
        if bag not in cache:
            vertices = [v for v in g.vertices if bag >> v & 1]
            cache[bag] = len(smallest_connected_superset(g, vertices)) - 1
        return cache[bag]

    for k in range(lower, upper):
        if elimination_search(masks, k, bag_cost) is not None:
            return k
    return upper


def check_connected_order_bound(g: Graph, b: Bramble) -> dict:
    """Connected order of ``b`` against ``tw ⌊ℓ/2⌋ + 1``."""
    length = ell(g)
    tw, _ = exact_treewidth(g)
    value, _ = connected_order(g, b)
    bound = tw * (length // 2) + 1
    return {'connected_order': value, 'tw': tw, 'ell': length, 'bound': bound, 'holds': value <= bound}
