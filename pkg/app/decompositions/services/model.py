from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType

from decompositions import exceptions
from graphs.services.graph import Graph, VertexSet
from graphs.services.traversal import components, is_connected_set

logger = logging.getLogger(__name__)


class Decomposition:
    """A tree with one bag per node, optionally rooted, bound to its host graph.

    Node ids are arbitrary integers. Values are immutable; every transformation
    returns a new decomposition over the same graph.
    """

    def __init__(
            self,
            graph: Graph,
            bags: Mapping[int, Iterable[int]],
            edges: Iterable[tuple[int, int]] = (),
            root: int | None = None,
    ):
        self.graph = graph
        self._bags = {t: frozenset(bag) for t, bag in sorted(bags.items())}
        self._edges = tuple(sorted({(min(a, b), max(a, b)) for a, b in edges}))
        self.root = root
        self._check_tree()
        for t, bag in self._bags.items():
            stray = [v for v in bag if not 0 <= v < graph.order]
            if stray:
                raise exceptions.InvalidDecomposition(detail=f'Bag of node {t} holds vertices {stray} outside the graph.')

    def _check_tree(self):
        nodes = self._bags.keys()
        for a, b in self._edges:
            if a == b or a not in nodes or b not in nodes:
                raise exceptions.InvalidTree(detail=f'Tree edge {a}-{b} does not join two distinct nodes.')
        if nodes and len(self._edges) != len(nodes) - 1:
            raise exceptions.InvalidTree(detail=f'{len(nodes)} nodes need {len(nodes) - 1} tree edges, got {len(self._edges)}.')
        if nodes and len(self.component_of(next(iter(nodes)))) != len(nodes):
            raise exceptions.InvalidTree(detail='Decomposition tree is disconnected.')
        if self.root is not None and self.root not in nodes:
            raise exceptions.UnknownNode(detail=f'Root {self.root} is not a tree node.')

    def __repr__(self) -> str:
        return f'<Decomposition nodes={len(self._bags)} root={self.root}>'

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return (self.graph, self._bags, self._edges, self.root) == (other.graph, other._bags, other._edges, other.root)

    __hash__ = None

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(self._bags)

    @property
    def bags(self) -> Mapping[int, VertexSet]:
        return MappingProxyType(self._bags)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def bag(self, t: int) -> VertexSet:
        try:
            return self._bags[t]
        except KeyError:
            raise exceptions.UnknownNode(detail=f'Node {t} is not a tree node.')

    @cached_property
    def _adjacency(self) -> dict[int, tuple[int, ...]]:
        adjacency = {t: [] for t in self._bags}
        for a, b in self._edges:
            adjacency[a].append(b)
            adjacency[b].append(a)
        return {t: tuple(sorted(nbrs)) for t, nbrs in adjacency.items()}

    def neighbors(self, t: int) -> tuple[int, ...]:
        self.bag(t)
        return self._adjacency[t]

    def component_of(self, t: int, without: int | None = None) -> set[int]:
        """Tree nodes reachable from ``t`` when node ``without`` is deleted."""
        seen = {t}
        queue = deque([t])
        while queue:
            u = queue.popleft()
            for w in self._adjacency[u]:
                if w != without and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def side(self, t: int, s: int) -> set[int]:
        """Nodes on the ``s`` side of the tree edge ``ts``."""
        return self.component_of(s, without=t)

    def union(self, nodes: Iterable[int]) -> VertexSet:
        vertices = set()
        for t in nodes:
            vertices |= self._bags[t]
        return frozenset(vertices)

    # rooted structure

    @property
    def is_rooted(self) -> bool:
        return self.root is not None

    @cached_property
    def _parents(self) -> dict[int, int | None]:
        if self.root is None:
            raise exceptions.NotRooted()
        parents = {self.root: None}
        queue = deque([self.root])
        while queue:
            u = queue.popleft()
            for w in self._adjacency[u]:
                if w not in parents:
                    parents[w] = u
                    queue.append(w)
        return parents

    def parent(self, t: int) -> int | None:
        self.bag(t)
        return self._parents[t]

    def children(self, t: int) -> tuple[int, ...]:
        return tuple(w for w in self.neighbors(t) if self._parents.get(w) == t)

    def preorder(self) -> Iterator[int]:
        """Root first, every node before its descendants, children by ascending id."""
        if self.root is None:
            raise exceptions.NotRooted()
        stack = [self.root]
        while stack:
            t = stack.pop()
            yield t
            stack.extend(reversed(self.children(t)))

    def subtree(self, t: int) -> set[int]:
        parent = self.parent(t)
        return self.component_of(t, without=parent)

    def ancestors(self, t: int) -> list[int]:
        """``t`` followed by its ancestors up to the root."""
        chain = [t]
        while (parent := self.parent(chain[-1])) is not None:
            chain.append(parent)
        return chain

    def with_bags(self, bags: Mapping[int, Iterable[int]]) -> Decomposition:
        return Decomposition(self.graph, bags, self._edges, self.root)


@dataclass
class ValidationReport:
    t1_ok: bool = True
    t2_ok: bool = True
    t3_ok: bool = True
    uncovered_vertices: list[int] = field(default_factory=list)
    uncovered_edges: list[tuple[int, int]] = field(default_factory=list)
    scattered_vertices: list[tuple[int, frozenset[int]]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.t1_ok and self.t2_ok and self.t3_ok

    def __bool__(self) -> bool:
        return self.valid

    def describe(self, g: Graph) -> dict:
        return {
            'valid': self.valid,
            't1_ok': self.t1_ok,
            't2_ok': self.t2_ok,
            't3_ok': self.t3_ok,
            'uncovered_vertices': g.labels(self.uncovered_vertices),
            'uncovered_edges': [[g.label(u), g.label(v)] for u, v in self.uncovered_edges],
            'scattered_vertices': [
                {'vertex': g.label(v), 'nodes': sorted(nodes)} for v, nodes in self.scattered_vertices
            ],
        }


@dataclass(frozen=True)
class BagCheck:
    ok: bool
    node: int | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class StabilityCheck:
    ok: bool
    edge: tuple[int, int] | None = None
    side: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _check_graph(g: Graph, d: Decomposition) -> None:
    if d.graph is not g and d.graph != g:
        raise exceptions.GraphMismatch()


def validate(g: Graph, d: Decomposition) -> ValidationReport:
    """Check the three tree-decomposition axioms, collecting failure witnesses."""
    _check_graph(g, d)
    report = ValidationReport()
    holders = {v: set() for v in g.vertices}
    for t, bag in d.bags.items():
        for v in bag:
            holders[v].add(t)

    report.uncovered_vertices = [v for v in g.vertices if not holders[v]]
    report.t1_ok = not report.uncovered_vertices

    report.uncovered_edges = [(u, v) for u, v in g.edges if not holders[u] & holders[v]]
    report.t2_ok = not report.uncovered_edges

    for v, nodes in holders.items():
        if nodes and not _induces_subtree(d, nodes):
            report.scattered_vertices.append((v, frozenset(nodes)))
    report.t3_ok = not report.scattered_vertices

    if not report.valid:
        logger.debug(f'Invalid decomposition: {report}')
    return report


def _induces_subtree(d: Decomposition, nodes: set[int]) -> bool:
    start = min(nodes)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in d.neighbors(u):
            if w in nodes and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(nodes)


def width(d: Decomposition) -> int:
    if not d.nodes:
        raise exceptions.EmptyDecomposition()
    return max(len(bag) for bag in d.bags.values()) - 1


def is_connected_decomposition(g: Graph, d: Decomposition) -> BagCheck:
    _check_graph(g, d)
    for t, bag in d.bags.items():
        if not is_connected_set(g, bag):
            return BagCheck(False, t)
    return BagCheck(True)


def is_stable(g: Graph, d: Decomposition) -> StabilityCheck:
    """Both side unions of every tree edge must induce connected subgraphs."""
    _check_graph(g, d)
    for a, b in d.edges:
        for t, s in ((a, b), (b, a)):
            if not is_connected_set(g, d.union(d.side(t, s))):
                return StabilityCheck(False, (a, b), s)
    return StabilityCheck(True)


def disconnection_defect(g: Graph, d: Decomposition) -> int:
    """Sum over oriented tree edges of (components of the side union - 1)."""
    return sum(
        max(len(components(g, d.union(d.side(t, s)))) - 1, 0)
        for a, b in d.edges
        for t, s in ((a, b), (b, a))
    )


def separates(g: Graph, d: Decomposition, edge: tuple[int, int]) -> bool:
    """The bag intersection of a tree edge separates its two side unions in ``g``."""
    a, b = edge
    separator = d.bag(a) & d.bag(b)
    left = d.union(d.side(b, a)) - separator
    right = d.union(d.side(a, b)) - separator
    for block in components(g, set(g.vertices) - separator):
        if block & left and block & right:
            return False
    return True


def subtree_bag_union(d: Decomposition, t: int) -> VertexSet:
    return d.union(d.subtree(t))


def reroot(d: Decomposition, r: int) -> Decomposition:
    d.bag(r)
    return Decomposition(d.graph, d.bags, d.edges, root=r)


def simplify(d: Decomposition) -> Decomposition:
    """Contract every tree edge whose one bag contains the other.

    Empty bags disappear this way. The surviving node keeps its id; equal bags
    keep the smaller id. Width, validity, connectedness of bags and stability
    are unchanged.
    """
    bags = dict(d.bags)
    adjacency = {t: set(d.neighbors(t)) for t in d.nodes}
    root = d.root

    merged = True
    while merged:
        merged = False
        for a in sorted(adjacency):
            for b in sorted(adjacency[a]):
                if bags[a] == bags[b]:
                    keep, drop = min(a, b), max(a, b)
                elif bags[a] < bags[b]:
                    keep, drop = b, a
                elif bags[b] < bags[a]:
                    keep, drop = a, b
                else:
                    continue
                for w in adjacency.pop(drop) - {keep}:
                    adjacency[w].discard(drop)
                    adjacency[w].add(keep)
                    adjacency[keep].add(w)
                adjacency[keep].discard(drop)
                del bags[drop]
                if root == drop:
                    root = keep
                merged = True
                break
            if merged:
                break

    edges = [(a, b) for a, nbrs in adjacency.items() for b in nbrs if a < b]
    return Decomposition(d.graph, bags, edges, root)
