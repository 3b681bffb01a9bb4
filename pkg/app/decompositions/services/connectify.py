from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field

from networkx.utils import UnionFind

from decompositions import exceptions
from decompositions.services.model import (
    Decomposition,
    is_connected_decomposition,
    is_stable,
    reroot,
    simplify,
    validate,
    width,
)
from decompositions.services.stabilize import stabilize
from decompositions.services.treewidth import exact_treewidth, minfill_decomposition
from graphs.exceptions import GraphDisconnected
from graphs.services.graph import Graph, Path
from graphs.services.traversal import (
    components,
    connected_component_graphs,
    is_connected,
    shortest_path_between_components,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathAddition:
    node: int
    path: Path
    child: int | None
    components_before: int
    components_after: int


class BookkeepingForest:
    """The graph ``Q_u``: bag vertices plus the path edges added below ``u``.

    Acyclicity is tracked incrementally; an edge joining two vertices of one
    class is kept and recorded as a cycle edge.
    """

    def __init__(self, vertices=()):
        self.vertices = set()
        self.edges = set()
        self.cycle_edges = []
        self._classes = UnionFind()
        self._merges = 0
        for v in vertices:
            self.add_vertex(v)

    def __repr__(self) -> str:
        return f'<BookkeepingForest vertices={len(self.vertices)} edges={len(self.edges)}>'

    def add_vertex(self, v: int) -> None:
        if v not in self.vertices:
            self.vertices.add(v)
            self._classes[v]

    def add_edge(self, u: int, v: int) -> None:
        key = (min(u, v), max(u, v))
        if key in self.edges:
            return
        self.add_vertex(u)
        self.add_vertex(v)
        self.edges.add(key)
        if self._classes[u] == self._classes[v]:
            self.cycle_edges.append(key)
        else:
            self._classes.union(u, v)
            self._merges += 1

    @property
    def component_count(self) -> int:
        return len(self.vertices) - self._merges

    @property
    def is_acyclic(self) -> bool:
        return not self.cycle_edges


@dataclass(frozen=True)
class Snapshot:
    bags: dict[int, frozenset[int]]
    forest_components: dict[int, int]


@dataclass
class InvariantReport:
    acyclic: bool = True
    monotone: bool = True
    strictly_decreasing: bool = True
    covers_base: bool = True
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.acyclic and self.monotone and self.strictly_decreasing and self.covers_base

    def __bool__(self) -> bool:
        return self.ok


class ConstructionState:
    """Working bags ``W``, bookkeeping forests ``Q`` and the addition trace of one run."""

    def __init__(self, g: Graph, d: Decomposition):
        if not d.is_rooted:
            raise exceptions.NotRooted()
        self.graph = g
        self.base = d
        self.working = d
        self.bookkeeping = {t: BookkeepingForest(d.bag(t)) for t in d.nodes}
        self.trace: list[PathAddition] = []
        self.finished: dict[int, frozenset[int]] = {}
        self.previous: Snapshot | None = None

    def __repr__(self) -> str:
        return f'<ConstructionState additions={len(self.trace)} finished={len(self.finished)}>'

    def snapshot(self) -> Snapshot:
        return Snapshot(
            bags=dict(self.working.bags),
            forest_components={u: q.component_count for u, q in self.bookkeeping.items()},
        )


def find_admissible_path(g: Graph, state: ConstructionState, t: int) -> Path:
    """Shortest path inside ``W_{T_t}`` joining two components of ``W_t``.

    Its internal vertices avoid ``W_t``; ties go to the lexicographically
    smallest vertex sequence.
    """
    d = state.working
    blocks = components(g, d.bag(t))
    if len(blocks) < 2:
        raise exceptions.BagAlreadyConnected(detail=f'Bag of node {t} is already connected.')

    path = shortest_path_between_components(g, d.union(d.subtree(t)), blocks)
    if path is None:
        logger.error(f'No admissible path at node {t} of {g!r}; trace has {len(state.trace)} additions')
        raise exceptions.AdmissiblePathMissing(detail=f'No admissible path at node {t}.')
    return path


def admissible_child(state: ConstructionState, t: int, p: Path) -> int | None:
    """The one child of ``t`` whose subtree holds every internal vertex of ``p``.

    Paths of length one have no internal vertex and no such child.
    """
    d = state.working
    bag = d.bag(t)
    if len([v for v in p if v in bag]) != 2 or p.ends[0] not in bag or p.ends[1] not in bag:
        raise exceptions.ConstructionInvariantBroken(
            detail=f'Path {list(p)} at node {t} meets the bag outside its two ends.'
        )
    if not p.internal:
        return None

    internal = set(p.internal)
    holders = [s for s in d.children(t) if internal & d.union(d.subtree(s))]
    if len(holders) != 1 or not internal <= d.union(d.subtree(holders[0])) - bag:
        raise exceptions.ConstructionInvariantBroken(
            detail=f'Internal vertices of path {list(p)} at node {t} are not inside one child subtree.'
        )
    return holders[0]


def apply_update(state: ConstructionState, t: int, p: Path) -> ConstructionState:
    """Add ``p`` to every bag of ``T_t``: ``W_u := W_u ∪ (V(P) ∩ W_{T_u})``.

    ``Q_u`` receives the vertices of ``P ∩ W_{T_u}`` and the path edges with
    both ends in ``W_{T_u}``, all measured before the update.
    """
    g, d = state.graph, state.working
    child = admissible_child(state, t, p)
    before = len(components(g, d.bag(t)))
    state.previous = state.snapshot()

    path_vertices = p.vertex_set
    path_edges = p.edges()
    bags = dict(d.bags)
    for u in d.subtree(t):
        reach = d.union(d.subtree(u))
        gained = path_vertices & reach
        if not gained:
            continue
        bags[u] = d.bag(u) | gained
        forest = state.bookkeeping[u]
        for v in gained:
            forest.add_vertex(v)
        for a, b in path_edges:
            if a in reach and b in reach:
                forest.add_edge(a, b)

    state.working = d.with_bags(bags)
    after = len(components(g, state.working.bag(t)))
    state.trace.append(PathAddition(t, p, child, before, after))
    logger.debug(f'Node {t}: added path {[g.label(v) for v in p]} via child {child}; components {before} -> {after}')
    return state


def check_invariants(state: ConstructionState) -> InvariantReport:
    """Bookkeeping forests stay acyclic and never gain components.

    Against the previous snapshot, every ``Q_u`` whose bag grew must have
    strictly fewer components. Every component of ``W_u`` meets ``V_u``.
    """
    report = InvariantReport()
    g, d = state.graph, state.working

    for u, forest in state.bookkeeping.items():
        if not forest.is_acyclic:
            report.acyclic = False
            report.failures.append(f'Q_{u} has cycle edges {forest.cycle_edges}')
        if forest.vertices != d.bag(u):
            report.acyclic = False
            report.failures.append(f'Q_{u} does not span the bag of node {u}')
        for block in components(g, d.bag(u)):
            if not block & state.base.bag(u):
                report.covers_base = False
                report.failures.append(f'A component of W_{u} misses the original bag')

    previous = state.previous
    if previous is not None:
        for u, forest in state.bookkeeping.items():
            was = previous.forest_components[u]
            if forest.component_count > was:
                report.monotone = False
                report.failures.append(f'Q_{u} grew from {was} to {forest.component_count} components')
            if d.bag(u) != previous.bags[u] and forest.component_count >= was:
                report.strictly_decreasing = False
                report.failures.append(f'W_{u} grew but Q_{u} kept {forest.component_count} components')
    return report


def process_node(state: ConstructionState, t: int, strict: bool = True) -> ConstructionState:
    """Add admissible paths at ``t`` until ``W_t`` is connected.

    With ``strict`` every addition is followed by the validity, stability and
    bookkeeping checks.
    """
    g = state.graph
    limit = max(len(state.base.bag(t)) - 1, 0)
    additions = 0
    while len(components(g, state.working.bag(t))) > 1:
        path = find_admissible_path(g, state, t)
        apply_update(state, t, path)
        additions += 1
        last = state.trace[-1]
        if last.components_after != last.components_before - 1:
            _broken(state, f'Addition at node {t} took {last.components_before} components to {last.components_after}.')
        if additions > limit:
            _broken(state, f'Node {t} needed more than {limit} additions.')
        if strict:
            _check_step(state)
    state.finished[t] = state.working.bag(t)
    return state


def run_construction(g: Graph, d: Decomposition, strict: bool = True) -> tuple[Decomposition, list[PathAddition]]:
    """Turn a rooted stable decomposition of a connected graph into a connected one.

    Nodes are processed root first, children by ascending id. The result
    extends ``d`` on the same tree and satisfies the per-node size bound
    ``|U_t| <= m_t (|V_t| - 1) + 1``.
    """
    if not is_connected(g):
        raise GraphDisconnected(detail='run_construction() needs a connected graph.')
    if not d.is_rooted:
        raise exceptions.NotRooted()
    if not validate(g, d):
        raise exceptions.InvalidDecomposition()
    if not is_stable(g, d):
        raise exceptions.UnstableDecomposition()

    state = ConstructionState(g, d)
    for t in d.preorder():
        process_node(state, t, strict=strict)

    out = state.working
    if not is_connected_decomposition(g, out):
        _broken(state, 'Construction finished with a disconnected bag.')
    for t, bound in size_bounds(d, state.trace).items():
        if len(out.bag(t)) > bound:
            _broken(state, f'Bag of node {t} has {len(out.bag(t))} vertices, above the bound {bound}.')

    logger.info(f'Connected decomposition of {g!r}: width {width(out)}, {len(state.trace)} path additions')
    return out, state.trace


def size_bounds(d: Decomposition, trace: list[PathAddition]) -> dict[int, int]:
    """``m_t (|V_t| - 1) + 1`` per node, ``m_t`` the longest path added at ``t`` or above."""
    longest = {}
    for addition in trace:
        longest[addition.node] = max(longest.get(addition.node, 0), addition.path.length)
    bounds = {}
    for t in d.nodes:
        m = max([longest.get(u, 0) for u in d.ancestors(t)] + [1])
        bounds[t] = m * (len(d.bag(t)) - 1) + 1
    return bounds


def connectify_graph(
    g: Graph,
    strict: bool = True,
    solve: Callable[[Graph], Decomposition] | None = None,
) -> tuple[Decomposition, list[PathAddition]]:
    """Exact tree-width, stabilisation and construction, one component at a time.

    Component trees are rooted at their smallest node and joined by edges
    from the first component root. Trace nodes and vertices refer to ``g``.
    ``solve`` supplies the starting decomposition of each component; by
    default the exact solver, falling back to min-fill above its limit.
    """
    bags, edges, trace = {}, [], []
    roots = []
    offset = 0
    for sub in connected_component_graphs(g):
        seed = (solve or _seed_decomposition)(sub)
        stable = stabilize(sub, seed)
        rooted = reroot(stable, min(stable.nodes))
        out, sub_trace = run_construction(sub, rooted, strict=strict)

        to_g = [g.vertex(sub.label(v)) for v in sub.vertices]
        ids = {t: offset + i for i, t in enumerate(out.nodes)}
        offset += len(ids)
        bags.update({ids[t]: {to_g[v] for v in out.bag(t)} for t in out.nodes})
        edges += [(ids[a], ids[b]) for a, b in out.edges]
        roots.append(ids[out.root])
        trace += [
            PathAddition(
                ids[a.node],
                Path(tuple(to_g[v] for v in a.path)),
                None if a.child is None else ids[a.child],
                a.components_before,
                a.components_after,
            )
            for a in sub_trace
        ]

    edges += [(roots[0], r) for r in roots[1:]]
    d = Decomposition(g, bags, edges, root=roots[0] if roots else None)
    logger.info(f'Connectified {g!r} over {len(roots)} components')
    return d, trace


def widths_by_root(g: Graph, d: Decomposition) -> dict[int, int]:
    """Output width of the construction for every choice of root of ``d``."""
    widths = {}
    for r in d.nodes:
        out, _ = run_construction(g, reroot(d, r), strict=False)
        widths[r] = width(out)
    logger.debug(f'Widths by root for {g!r}: {widths}')
    return widths


def bound_report(tw: int, ell: int | None, output_width: int) -> dict:
    """Compare a construction's width with ``tw * (ell - 2)``; forests carry no bound."""
    if ell is None:
        return {'tw': tw, 'ell': None, 'width': output_width, 'bound': None, 'holds': output_width <= max(tw, 0)}
    bound = tw * (ell - 2)
    return {'tw': tw, 'ell': ell, 'width': output_width, 'bound': bound, 'holds': output_width <= bound}


def _seed_decomposition(g: Graph) -> Decomposition:
    try:
        _, d = exact_treewidth(g)
    except exceptions.SolverLimitExceeded:
        logger.warning(f'{g!r} is beyond the exact solver; seeding the construction with min-fill')
        d = simplify(minfill_decomposition(g))
    return d


def _check_step(state: ConstructionState) -> None:
    g, d = state.graph, state.working
    if not validate(g, d):
        _broken(state, 'Working decomposition became invalid.')
    if not is_stable(g, d):
        _broken(state, 'Working decomposition became unstable.')
    report = check_invariants(state)
    if not report:
        _broken(state, '; '.join(report.failures))
    for t, bag in state.finished.items():
        if d.bag(t) != bag:
            _broken(state, f'Bag of processed node {t} changed.')


def _broken(state: ConstructionState, message: str):
    trace = [{'node': a.node, 'path': [state.graph.label(v) for v in a.path]} for a in state.trace]
    logger.error(f'{message} Trace: {trace}')
    raise exceptions.ConstructionInvariantBroken(detail=message)
