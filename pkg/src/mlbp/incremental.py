"""Components, bridges and blocks maintained under edge insertions.

An inserted edge ``(u, v)`` falls in one of three cases:

* ``u`` and ``v`` already share a vertex-block: nothing changes, the edge
  joins that block;
* ``u`` and ``v`` lie in different components: the components merge and the
  edge is a new bridge, i.e. a new singleton vertex-block;
* otherwise the edge closes a cycle through several blocks. Every simple
  ``u``-``v`` path crosses the same chain of blocks, so the vertex-blocks of
  the edges on a BFS shortest path and the edge-blocks of its vertices are
  merged into one, and the bridges on the path stop being bridges.

Components, edge-blocks and vertex-blocks are three union-find forests with
path compression; on a merge the smaller root id survives.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .graph import LabeledGraph, LabelOutOfRangeError, Mode, VertexOutOfRangeError


class EdgeAlreadyPresentError(ValueError):
    pass


class Counters(NamedTuple):
    components: int
    vertex_blocks: int
    edge_blocks: int

    def __sub__(self, other):
        return Counters(*(a - b for a, b in zip(self, other)))


def _find(parent: list[int], x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def _union_all(parent: list[int], roots: set[int]) -> int:
    keep = min(roots)
    for r in roots:
        parent[r] = keep
    return keep


@dataclass
class IncrementalState:
    num_vertices: int
    adjacency: list[list[tuple[int, int]]]
    endpoints: dict[int, tuple[int, int]]  # inserted edge id -> (u, v)
    comp_parent: list[int]
    eblock_parent: list[int]
    vblock_parent: list[int]
    vblock_of_edge: dict[int, int]  # raw id; resolve with vertex_block_of()
    bridges: set[int]
    num_components: int
    num_vertex_blocks: int
    num_edge_blocks: int

    @classmethod
    def new(cls, n: int) -> IncrementalState:
        if n < 1:
            raise ValueError(f"need at least one vertex, got n={n}")
        return cls(
            num_vertices=n,
            adjacency=[[] for _ in range(n)],
            endpoints={},
            comp_parent=list(range(n)),
            eblock_parent=list(range(n)),
            vblock_parent=[],
            vblock_of_edge={},
            bridges=set(),
            num_components=n,
            num_vertex_blocks=n,
            num_edge_blocks=n,
        )

    def copy(self) -> IncrementalState:
        return IncrementalState(
            self.num_vertices,
            [a.copy() for a in self.adjacency],
            self.endpoints.copy(),
            self.comp_parent.copy(),
            self.eblock_parent.copy(),
            self.vblock_parent.copy(),
            self.vblock_of_edge.copy(),
            self.bridges.copy(),
            self.num_components,
            self.num_vertex_blocks,
            self.num_edge_blocks,
        )

    def counters(self) -> Counters:
        return Counters(self.num_components, self.num_vertex_blocks, self.num_edge_blocks)

    def is_biconnected(self, mode: Mode | str) -> bool:
        blocks = self.num_edge_blocks if Mode(mode) is Mode.EDGE else self.num_vertex_blocks
        return self.num_vertices >= 3 and self.num_components == 1 and blocks == 1

    def add_edge(self, u: int, v: int, edge_id: int | None = None) -> Counters:
        """Insert ``(u, v)`` and return the change of the three counters.

        ``edge_id`` defaults to the next unused integer.
        """
        n = self.num_vertices
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRangeError(x, n)
        if u == v:
            raise ValueError(f"self-loop on vertex {u}")
        if edge_id is None:
            edge_id = max(self.endpoints, default=-1) + 1
        if edge_id in self.endpoints or any(w == v for w, _ in self.adjacency[u]):
            raise EdgeAlreadyPresentError(f"edge ({u}, {v}) id {edge_id} already inserted")
        before = self.counters()

        ru, rv = _find(self.comp_parent, u), _find(self.comp_parent, v)
        if ru != rv:
            _union_all(self.comp_parent, {ru, rv})
            self.num_components -= 1
            self.num_vertex_blocks += 1 - (not self.adjacency[u]) - (not self.adjacency[v])
            self.vblock_of_edge[edge_id] = len(self.vblock_parent)
            self.vblock_parent.append(len(self.vblock_parent))
            self.bridges.add(edge_id)
        else:
            path_vertices, path_edges = self._bfs_path(u, v)
            vblocks = {_find(self.vblock_parent, self.vblock_of_edge[e]) for e in path_edges}
            eblocks = {_find(self.eblock_parent, x) for x in path_vertices}
            self.vblock_of_edge[edge_id] = _union_all(self.vblock_parent, vblocks)
            _union_all(self.eblock_parent, eblocks)
            self.num_vertex_blocks -= len(vblocks) - 1
            self.num_edge_blocks -= len(eblocks) - 1
            self.bridges.difference_update(path_edges)

        self.endpoints[edge_id] = (u, v)
        self.adjacency[u].append((v, edge_id))
        self.adjacency[v].append((u, edge_id))
        return self.counters() - before

    def add_label(self, g: LabeledGraph, label: int) -> Counters:
        """Insert every edge of ``label`` in stored order; returns the total change."""
        if not 0 <= label < g.num_labels:
            raise LabelOutOfRangeError(label, g.num_labels)
        before = self.counters()
        for i, e in enumerate(g.edges):
            if e.label == label:
                self.add_edge(e.u, e.v, i)
        return self.counters() - before

    def _bfs_path(self, s: int, t: int) -> tuple[list[int], list[int]]:
        via: dict[int, tuple[int, int]] = {s: (-1, -1)}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for w, eid in self.adjacency[x]:
                if w in via:
                    continue
                via[w] = (x, eid)
                if w == t:
                    queue.clear()
                    break
                queue.append(w)
        vertices, edges = [t], []
        x = t
        while x != s:
            x, eid = via[x]
            vertices.append(x)
            edges.append(eid)
        return vertices, edges

    # read-only views; path compression may still rewrite parent pointers

    def component_of(self, v: int) -> int:
        return _find(self.comp_parent, v)

    def edge_block_of(self, v: int) -> int:
        return _find(self.eblock_parent, v)

    def vertex_block_of(self, edge_id: int) -> int:
        return _find(self.vblock_parent, self.vblock_of_edge[edge_id])

    def isolated_vertices(self) -> list[int]:
        return [v for v, a in enumerate(self.adjacency) if not a]

    def cut_vertices(self) -> set[int]:
        cuts = set()
        for v, nbrs in enumerate(self.adjacency):
            if len({self.vertex_block_of(e) for _, e in nbrs}) > 1:
                cuts.add(v)
        return cuts

    def vertex_blocks(self) -> set[frozenset[int]]:
        groups: dict[int, set[int]] = {}
        for e in self.endpoints:
            groups.setdefault(self.vertex_block_of(e), set()).add(e)
        return {frozenset(s) for s in groups.values()}

    def edge_blocks(self) -> set[frozenset[int]]:
        groups: dict[int, set[int]] = {}
        for v in range(self.num_vertices):
            groups.setdefault(self.edge_block_of(v), set()).add(v)
        return {frozenset(s) for s in groups.values()}

    def components(self) -> set[frozenset[int]]:
        groups: dict[int, set[int]] = {}
        for v in range(self.num_vertices):
            groups.setdefault(self.component_of(v), set()).add(v)
        return {frozenset(s) for s in groups.values()}


def new_state(n: int) -> IncrementalState:
    return IncrementalState.new(n)


def snapshot_counters(state: IncrementalState) -> Counters:
    return state.counters()
