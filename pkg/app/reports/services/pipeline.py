from __future__ import annotations

import logging
from dataclasses import dataclass, field

from cycles.exceptions import NoCycle
from cycles.services.cycle_space import ell
from decompositions.exceptions import SolverLimitExceeded
from decompositions.services.connectify import (
    PathAddition,
    bound_report,
    connectify_graph,
    run_construction,
)
from decompositions.services.model import Decomposition, is_stable, reroot, simplify, width
from decompositions.services.stabilize import stabilize
from decompositions.services.treewidth import exact_treewidth, minfill_decomposition
from graphs.services.graph import Graph

logger = logging.getLogger(__name__)


@dataclass
class TreewidthResult:
    value: int | None
    method: str
    decomposition: Decomposition


@dataclass
class PipelineResult:
    tw: int | None
    method: str
    ell: int | None
    bound: int | None
    achieved: int | None
    holds: bool
    decomposition: Decomposition
    trace: list[PathAddition] = field(default_factory=list)

    def fields(self) -> dict:
        return {'tw': self.tw, 'ell': self.ell, 'bound': self.bound, 'achieved': self.achieved}


def treewidth(g: Graph, heuristic: bool = False) -> TreewidthResult:
    """Exact tree-width, or the min-fill width when ``heuristic`` and the exact solver refuses.

    The empty graph has no bags and its value is ``None``.
    """
    try:
        _, d = exact_treewidth(g)
        return TreewidthResult(width(d) if d.nodes else None, 'exact', d)
    except SolverLimitExceeded:
        if not heuristic:
            raise
    d = simplify(minfill_decomposition(g))
    value = width(d) if d.nodes else None
    logger.warning(f'{g!r}: min-fill width {value} used in place of the tree-width')
    return TreewidthResult(value, 'minfill', d)


def ell_or_none(g: Graph) -> int | None:
    try:
        return ell(g)
    except NoCycle:
        return None


def connectify_given(g: Graph, d: Decomposition) -> tuple[Decomposition, list[PathAddition]]:
    """Run the construction on a supplied decomposition, stabilising and rooting it when needed."""
    if not d.nodes:
        return d, []
    if not is_stable(g, d):
        logger.info(f'Supplied decomposition of {g!r} is not stable; stabilising it first')
        d = stabilize(g, d)
    if d.root is None:
        d = reroot(d, min(d.nodes))
    return run_construction(g, d)


def connectify_solved(g: Graph, heuristic: bool = False) -> tuple[int | None, str, Decomposition, list[PathAddition]]:
    """Solve each component once and run the construction on that decomposition.

    The tree-width of ``g`` is the largest component value; the method is
    ``minfill`` as soon as one component needed the heuristic.
    """
    solved = []

    def solve(sub: Graph) -> Decomposition:
        result = treewidth(sub, heuristic)
        solved.append(result)
        return result.decomposition

    out, trace = connectify_graph(g, solve=solve)
    method = 'exact' if all(r.method == 'exact' for r in solved) else 'minfill'
    value = max((r.value for r in solved), default=None)
    return value, method, out, trace


def run_pipeline(g: Graph, decomposition: Decomposition | None = None, heuristic: bool = False) -> PipelineResult:
    """Tree-width, stabilisation and construction, checked against ``tw * (ell - 2)``.

    For a forest the cycle parameter is undefined and the check is
    ``achieved <= tw``. The empty graph reports ``None`` throughout and holds.
    """
    if decomposition is None:
        tw, method, out, trace = connectify_solved(g, heuristic)
    else:
        solved = treewidth(g, heuristic)
        tw, method = solved.value, solved.method
        out, trace = connectify_given(g, decomposition)
    length = ell_or_none(g)

    if out.nodes:
        achieved = width(out)
        report = bound_report(tw, length, achieved)
    else:
        achieved = None
        report = {'bound': None, 'holds': True}
    logger.info(f'Pipeline on {g!r}: {report}')
    return PipelineResult(
        tw=tw,
        method=method,
        ell=length,
        bound=report['bound'],
        achieved=achieved,
        holds=report['holds'],
        decomposition=out,
        trace=trace,
    )
