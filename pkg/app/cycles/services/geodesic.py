from __future__ import annotations

import logging
import math

import networkx as nx
from django.conf import settings

from cycles import exceptions
from cycles.services.cycle_space import ell, enumerate_cycles_upto
from decompositions.services.treewidth import exact_treewidth
from graphs.services.graph import Cycle, Graph

logger = logging.getLogger(__name__)


def is_geodesic_cycle(g: Graph, c: Cycle) -> bool:
    """Every two vertices of ``c`` are as close along ``c`` as they are in ``g``."""
    c.check(g)
    graph = g.to_networkx()
    m = c.length
    for i, u in enumerate(c):
        reach = nx.single_source_shortest_path_length(graph, u, cutoff=m // 2)
        for j, v in enumerate(c):
            along = min(abs(i - j), m - abs(i - j))
            if reach.get(v, math.inf) < along:
                return False
    return True


def girth(g: Graph) -> int | None:
    value = nx.girth(g.to_networkx())
    return None if value == math.inf else int(value)


def longest_geodesic_cycle(g: Graph) -> Cycle | None:
    """Longest geodesic cycle by exhaustive search; guarded by ``GEODESIC_SEARCH_LIMIT``."""
    if g.order > settings.GEODESIC_SEARCH_LIMIT:
        raise exceptions.SearchLimitExceeded(
            detail=f'{g.order} vertices exceed GEODESIC_SEARCH_LIMIT={settings.GEODESIC_SEARCH_LIMIT}.'
        )
    best = None
    for cycle in enumerate_cycles_upto(g, g.order):
        if (best is None or cycle.length > best.length) and is_geodesic_cycle(g, cycle):
            best = cycle
    return best


def check_geodesic_bound(g: Graph, c: Cycle) -> dict:
    """A geodesic cycle of length ``k`` forces tree-width at least ``k / ell``."""
    if not is_geodesic_cycle(g, c):
        raise exceptions.NotGeodesic(detail=f'Cycle {[g.label(v) for v in c]} is not geodesic.')
    length = ell(g)
    tw, _ = exact_treewidth(g)
    holds = tw * length >= c.length
    if not holds:
        logger.error(f'Geodesic cycle of length {c.length} in {g!r} beats tw={tw} with ell={length}')
    return {'k': c.length, 'ell': length, 'tw': tw, 'holds': holds}
