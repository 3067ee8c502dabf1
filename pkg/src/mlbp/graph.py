"""Labelled undirected graphs, label sets and label-induced subgraphs."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence


class Mode(str, Enum):
    """Which flavour of bi-connectivity is required."""

    EDGE = "edge"
    VERTEX = "vertex"


class GraphError(ValueError):
    """Invalid edge in the input of :func:`build_graph`.

    ``edge_index`` is the position of the offending edge in the input list.
    """

    def __init__(self, message: str, edge_index: int | None = None):
        super().__init__(message)
        self.edge_index = edge_index


class SelfLoopError(GraphError):
    def __init__(self, u: int, edge_index: int | None = None):
        super().__init__(f"self-loop on vertex {u}", edge_index)
        self.u = u


class DuplicateEdgeError(GraphError):
    def __init__(self, u: int, v: int, edge_index: int | None = None):
        super().__init__(f"duplicate edge ({u}, {v})", edge_index)
        self.u, self.v = u, v


class VertexOutOfRangeError(GraphError):
    def __init__(self, vertex: int, n: int, edge_index: int | None = None):
        super().__init__(f"vertex {vertex} outside 0..{n - 1}", edge_index)
        self.vertex = vertex


class LabelOutOfRangeError(GraphError):
    def __init__(self, label: int, q: int, edge_index: int | None = None):
        super().__init__(f"label {label} outside 0..{q - 1}", edge_index)
        self.label = label


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    label: int


Adjacency = tuple[tuple[tuple[int, int], ...], ...]


@dataclass(frozen=True)
class LabeledGraph:
    """Immutable simple graph with exactly one label per edge.

    ``adjacency[v]`` lists ``(neighbour, edge_index)`` pairs in edge-list order.
    """

    num_vertices: int
    num_labels: int
    edges: tuple[Edge, ...]
    adjacency: Adjacency

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> range:
        return range(len(self.edges))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges_with_label(self, label: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.label == label]


def build_graph(n: int, q: int, edges: Iterable[Sequence[int]]) -> LabeledGraph:
    """Validate ``(u, v, label)`` triples and build a :class:`LabeledGraph`.

    Endpoints are stored with ``u < v``; the edge order of the input is kept.
    """
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    if q < 1:
        raise ValueError(f"need at least one label, got q={q}")
    canonical: list[Edge] = []
    seen: set[tuple[int, int]] = set()
    for idx, (u, v, c) in enumerate(edges):
        u, v, c = int(u), int(v), int(c)
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRangeError(x, n, idx)
        if u == v:
            raise SelfLoopError(u, idx)
        if not 0 <= c < q:
            raise LabelOutOfRangeError(c, q, idx)
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise DuplicateEdgeError(u, v, idx)
        seen.add((u, v))
        canonical.append(Edge(u, v, c))

    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, e in enumerate(canonical):
        adj[e.u].append((e.v, i))
        adj[e.v].append((e.u, i))
    return LabeledGraph(n, q, tuple(canonical), tuple(tuple(a) for a in adj))


@dataclass(frozen=True)
class LabelSet:
    """Subset of the label ids ``0..q-1`` held as an integer bit mask."""

    num_labels: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.num_labels:
            raise ValueError(f"mask {self.mask:#x} has labels outside 0..{self.num_labels - 1}")

    @classmethod
    def of(cls, num_labels: int, labels: Iterable[int] = ()) -> LabelSet:
        mask = 0
        for c in labels:
            if not 0 <= c < num_labels:
                raise LabelOutOfRangeError(c, num_labels)
            mask |= 1 << c
        return cls(num_labels, mask)

    @classmethod
    def full(cls, num_labels: int) -> LabelSet:
        return cls(num_labels, (1 << num_labels) - 1)

    def __contains__(self, label: object) -> bool:
        return isinstance(label, int) and 0 <= label < self.num_labels and bool(self.mask >> label & 1)

    def __iter__(self) -> Iterator[int]:
        mask, c = self.mask, 0
        while mask:
            if mask & 1:
                yield c
            mask >>= 1
            c += 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __or__(self, other: LabelSet) -> LabelSet:
        return LabelSet(self.num_labels, self.mask | other.mask)

    def __le__(self, other: LabelSet) -> bool:
        return self.mask & ~other.mask == 0

    def add(self, label: int) -> LabelSet:
        if not 0 <= label < self.num_labels:
            raise LabelOutOfRangeError(label, self.num_labels)
        return LabelSet(self.num_labels, self.mask | 1 << label)

    def remove(self, label: int) -> LabelSet:
        return LabelSet(self.num_labels, self.mask & ~(1 << label))

    def sorted(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"LabelSet({self.sorted()})"


@dataclass(frozen=True)
class SubgraphView:
    """All vertices of ``graph`` with only the edges listed in ``edge_ids``.

    Edge ids keep the numbering of the host graph.
    """

    graph: LabeledGraph
    edge_ids: tuple[int, ...]
    adjacency: Adjacency

    @property
    def num_vertices(self) -> int:
        return self.graph.num_vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges


def edge_subgraph(g: LabeledGraph, edge_ids: Iterable[int]) -> SubgraphView:
    keep = set(edge_ids)
    adj = tuple(tuple((w, i) for w, i in nbrs if i in keep) for nbrs in g.adjacency)
    return SubgraphView(g, tuple(sorted(keep)), adj)


def induced_subgraph(g: LabeledGraph, labels: LabelSet | Iterable[int]) -> SubgraphView:
    """The subgraph ``(V, E(L))`` keeping the edges whose label is in ``labels``."""
    if not isinstance(labels, LabelSet):
        labels = LabelSet.of(g.num_labels, labels)
    if labels.num_labels != g.num_labels:
        raise ValueError("label set built for a different label alphabet")
    mask = labels.mask
    edges = g.edges
    ids = tuple(i for i, e in enumerate(edges) if mask >> e.label & 1)
    adj = tuple(tuple((w, i) for w, i in nbrs if mask >> edges[i].label & 1) for nbrs in g.adjacency)
    return SubgraphView(g, ids, adj)


def label_frequencies(g: LabeledGraph) -> list[int]:
    counts = [0] * g.num_labels
    for e in g.edges:
        counts[e.label] += 1
    return counts
