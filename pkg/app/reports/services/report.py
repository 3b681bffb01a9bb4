from __future__ import annotations

import logging
from collections.abc import Callable

from rest_framework.exceptions import APIException

from brambles.services.bramble import Bramble, bramble_lower_bound, connected_order, locality_bound
from brambles.services.wctw import wctw_upper
from cycles.services.cycle_space import cyclomatic_number
from cycles.services.geodesic import girth, longest_geodesic_cycle
from decompositions.services.connectify import widths_by_root
from decompositions.services.stabilize import stabilize
from graphs.services.graph import Graph
from graphs.services.traversal import is_connected
from reports.services.pipeline import ell_or_none, treewidth

logger = logging.getLogger(__name__)

NO_CYCLE = 'no cycle: ell undefined'


def _optional(what: str, compute: Callable):
    """Value of ``compute()``, or None when a size guard or a precondition refuses it."""
    try:
        return compute()
    except APIException as e:
        if e.status_code >= 500:
            raise
        logger.info(f'{what} skipped: {e.detail}')
        return None


def invariant_report(g: Graph, bramble: Bramble | None = None) -> dict:
    """Every invariant that can be computed for ``g`` within the configured limits.

    Entries that a limit or a precondition rules out are None.
    """
    tw = treewidth(g, heuristic=True)
    length = ell_or_none(g)
    report = {
        'vertices': g.order,
        'edges': g.edge_count,
        'tw': tw.value,
        'tw_method': tw.method,
        'cyclomatic': cyclomatic_number(g),
        'ell': length,
        'girth': girth(g),
    }
    if length is None:
        report['note'] = NO_CYCLE
        report['tw_ell_bound'] = None
        report['connected_order_bound'] = None
    else:
        report['tw_ell_bound'] = tw.value * (length - 2)
        report['connected_order_bound'] = tw.value * (length // 2) + 1

    geodesic = _optional('longest geodesic cycle', lambda: longest_geodesic_cycle(g))
    report['longest_geodesic_cycle'] = None if geodesic is None else [g.label(v) for v in geodesic]

    connected_cyclic = length is not None and is_connected(g) and tw.method == 'exact'
    upper = _optional('wctw upper bound', lambda: wctw_upper(g)) if connected_cyclic else None
    report['wctw_upper'] = None if upper is None else upper.value
    lower = _optional('bramble lower bound', lambda: bramble_lower_bound(g))
    report['wctw_lower'] = None if lower is None else max(lower[0] - 1, 0)

    if is_connected(g) and tw.decomposition.nodes:
        stable = _optional('stabilisation', lambda: stabilize(g, tw.decomposition))
        widths = None if stable is None else widths_by_root(g, stable)
        report['widths_by_root'] = None if widths is None else sorted(set(widths.values()))
    else:
        report['widths_by_root'] = None

    if bramble is not None:
        value = _optional('bramble connected order', lambda: connected_order(g, bramble)[0])
        report['bramble_connected_order'] = value
        report['locality_bound'] = None if value is None else locality_bound(value)
    return report
