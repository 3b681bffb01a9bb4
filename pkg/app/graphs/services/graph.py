from __future__ import annotations

import hashlib
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from graphs import exceptions

VertexSet = frozenset[int]


class Graph:
    """Finite simple undirected graph on dense vertex ids ``0..n-1``.

    Every vertex carries a unique string label; parsers and generators use the
    labels for names such as ``x0_3`` or ``s_1_2_1`` while all algorithms work
    on the integer ids. Instances are never mutated after construction.
    """

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int]], name: str = ''):
        self.name = name
        self._labels = tuple(str(label) for label in labels)
        self._index = {label: v for v, label in enumerate(self._labels)}
        if len(self._index) != len(self._labels):
            raise exceptions.InvalidGraph(detail='Vertex labels must be unique.')

        n = len(self._labels)
        adjacency = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise exceptions.InvalidGraph(detail=f'Edge {u}-{v} leaves the vertex range 0..{n - 1}.')
            if u == v:
                raise exceptions.InvalidGraph(detail=f'Self-loop at {self._labels[u]!r}.')
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._adjacency = tuple(frozenset(nbrs) for nbrs in adjacency)

    @classmethod
    def from_labelled_edges(cls, edges: Iterable[tuple[str, str]], name: str = '') -> Graph:
        builder = GraphBuilder(name=name)
        for a, b in edges:
            builder.add_edge(a, b)
        return builder.build()

    def __len__(self) -> int:
        return len(self._labels)

    def __repr__(self) -> str:
        title = f' {self.name!r}' if self.name else ''
        return f'<Graph{title} n={self.order} m={self.edge_count}>'

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self._labels, self.edges))

    @property
    def order(self) -> int:
        return len(self._labels)

    @property
    def vertices(self) -> range:
        return range(len(self._labels))

    @property
    def vertex_set(self) -> VertexSet:
        return frozenset(self.vertices)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v)
            for u, nbrs in enumerate(self._adjacency)
            for v in sorted(nbrs)
            if u < v
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency[u]

    def label(self, v: int) -> str:
        return self._labels[v]

    def labels(self, vertices: Iterable[int]) -> list[str]:
        return [self._labels[v] for v in sorted(vertices)]

    def vertex(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise exceptions.UnknownVertex(detail=f'Unknown vertex label {label!r}.')

    def vertices_of(self, labels: Iterable[str]) -> VertexSet:
        return frozenset(self.vertex(label) for label in labels)

    def neighborhood(self, vertices: Iterable[int]) -> VertexSet:
        """Open neighbourhood of a vertex set."""
        vertices = frozenset(vertices)
        reached = set()
        for v in vertices:
            reached |= self._adjacency[v]
        return frozenset(reached - vertices)

    @cached_property
    def fingerprint(self) -> str:
        digest = hashlib.sha256()
        digest.update('\n'.join(self._labels).encode())
        for u, v in self.edges:
            digest.update(f'|{u},{v}'.encode())
        return digest.hexdigest()[:16]

    def to_networkx(self) -> nx.Graph:
        return self._networkx.copy(as_view=True)

    @cached_property
    def _networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def subgraph(self, within: Iterable[int], name: str = '') -> Graph:
        """Induced subgraph with re-densified ids; labels are preserved."""
        kept = sorted(set(within))
        position = {v: i for i, v in enumerate(kept)}
        edges = [(position[u], position[v]) for u, v in self.edges if u in position and v in position]
        return Graph([self._labels[v] for v in kept], edges, name=name or self.name)

    def remove_vertices(self, removed: Iterable[int]) -> Graph:
        removed = set(removed)
        return self.subgraph((v for v in self.vertices if v not in removed))


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]

    def __post_init__(self):
        if not self.vertices:
            raise exceptions.InvalidPath(detail='A path has at least one vertex.')
        if len(set(self.vertices)) != len(self.vertices):
            raise exceptions.InvalidPath(detail=f'Path repeats a vertex: {self.vertices}.')

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def internal(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def vertex_set(self) -> VertexSet:
        return frozenset(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def check(self, g: Graph) -> None:
        for u, v in self.edges():
            if not g.has_edge(u, v):
                raise exceptions.InvalidPath(detail=f'{g.label(u)} and {g.label(v)} are not adjacent.')


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise exceptions.InvalidCycle(detail='A cycle has at least three vertices.')
        if len(set(self.vertices)) != len(self.vertices):
            raise exceptions.InvalidCycle(detail=f'Cycle repeats a vertex: {self.vertices}.')

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> VertexSet:
        return frozenset(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:] + self.vertices[:1]))

    def canonical(self) -> Cycle:
        """Rotation starting at the smallest vertex, oriented towards its smaller neighbour."""
        start = self.vertices.index(min(self.vertices))
        rotated = self.vertices[start:] + self.vertices[:start]
        if rotated[-1] < rotated[1]:
            rotated = rotated[:1] + tuple(reversed(rotated[1:]))
        return Cycle(rotated)

    def arc(self, start: int, size: int) -> VertexSet:
        """``size`` consecutive vertices beginning at position ``start``."""
        return frozenset(self.vertices[(start + i) % len(self.vertices)] for i in range(size))

    def check(self, g: Graph) -> None:
        for u, v in self.edges():
            if not g.has_edge(u, v):
                raise exceptions.InvalidCycle(detail=f'{g.label(u)} and {g.label(v)} are not adjacent.')


class GraphBuilder:
    """Incremental construction of a labelled graph."""

    def __init__(self, name: str = ''):
        self.name = name
        self._labels: list[str] = []
        self._index: dict[str, int] = {}
        self._edges: set[tuple[int, int]] = set()

    def add_vertex(self, label) -> int:
        label = str(label)
        if label not in self._index:
            self._index[label] = len(self._labels)
            self._labels.append(label)
        return self._index[label]

    def add_edge(self, a, b) -> None:
        u, v = self.add_vertex(a), self.add_vertex(b)
        if u == v:
            raise exceptions.InvalidGraph(detail=f'Self-loop at {a!r}.')
        self._edges.add((min(u, v), max(u, v)))

    def add_path(self, labels: Sequence) -> None:
        for a, b in zip(labels, labels[1:]):
            self.add_edge(a, b)

    def build(self) -> Graph:
        return Graph(self._labels, sorted(self._edges), name=self.name)
