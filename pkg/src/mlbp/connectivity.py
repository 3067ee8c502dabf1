"""Static decomposition of a graph into components, bridges, cut-vertices and blocks.

One iterative depth-first search per component computes depths and lowpoints.
Edges are kept on a stack while they are traversed; when a child ``w`` of ``v``
finishes with ``low[w] >= depth[v]`` the edges above the tree edge ``(v, w)``
form one vertex-block. Edge-blocks are the components left after deleting the
bridges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Protocol

from .graph import Adjacency, Mode


class GraphLike(Protocol):
    num_vertices: int
    adjacency: Adjacency
    edge_ids: tuple[int, ...] | range


@dataclass(frozen=True)
class ConnectivityReport:
    """Result of :func:`analyze`.

    ``vertex_block_of`` maps every edge id to its vertex-block; isolated
    vertices get their own block ids through ``isolated_block_of``. Block and
    component ids are numbered in discovery order.
    """

    num_vertices: int
    num_components: int
    component_of: tuple[int, ...]
    bridges: frozenset[int]
    cut_vertices: frozenset[int]
    vertex_block_of: dict[int, int]
    isolated_block_of: dict[int, int]
    num_vertex_blocks: int
    edge_block_of: tuple[int, ...]
    num_edge_blocks: int
    edge_biconnected: bool
    vertex_biconnected: bool
    # adjacency entries scanned; instrumentation only
    traversals: int = field(default=0, compare=False)

    def vertex_blocks(self) -> set[frozenset[int]]:
        """Vertex-blocks as sets of edge ids (isolated vertices excluded)."""
        groups: dict[int, set[int]] = {}
        for e, b in self.vertex_block_of.items():
            groups.setdefault(b, set()).add(e)
        return {frozenset(s) for s in groups.values()}

    def edge_blocks(self) -> set[frozenset[int]]:
        return _partition(self.edge_block_of)

    def components(self) -> set[frozenset[int]]:
        return _partition(self.component_of)


def _partition(ids: tuple[int, ...]) -> set[frozenset[int]]:
    groups: dict[int, set[int]] = {}
    for v, b in enumerate(ids):
        groups.setdefault(b, set()).add(v)
    return {frozenset(s) for s in groups.values()}


def analyze(view: GraphLike) -> ConnectivityReport:
    n = view.num_vertices
    adj = view.adjacency
    depth = [-1] * n
    low = [0] * n
    parent_edge = [-1] * n
    pos = [0] * n
    component_of = [-1] * n
    vertex_block_of: dict[int, int] = {}
    isolated_block_of: dict[int, int] = {}
    bridges: set[int] = set()
    cut_vertices: set[int] = set()
    next_block = 0
    num_components = 0
    traversals = 0

    for root in range(n):
        if depth[root] != -1:
            continue
        comp = num_components
        num_components += 1
        depth[root] = 0
        component_of[root] = comp
        if not adj[root]:
            isolated_block_of[root] = next_block
            next_block += 1
            continue

        root_children = 0
        stack = [root]
        edge_stack: list[int] = []
        while stack:
            v = stack[-1]
            nbrs = adj[v]
            if pos[v] < len(nbrs):
                w, eid = nbrs[pos[v]]
                pos[v] += 1
                traversals += 1
                if eid == parent_edge[v]:
                    continue
                if depth[w] == -1:
                    depth[w] = low[w] = depth[v] + 1
                    parent_edge[w] = eid
                    component_of[w] = comp
                    edge_stack.append(eid)
                    stack.append(w)
                    if v == root:
                        root_children += 1
                elif depth[w] < depth[v]:
                    # back edge to an ancestor; the reverse direction is skipped
                    if depth[w] < low[v]:
                        low[v] = depth[w]
                    edge_stack.append(eid)
                continue

            stack.pop()
            if not stack:
                break
            p = stack[-1]
            if low[v] < low[p]:
                low[p] = low[v]
            if low[v] >= depth[p]:
                tree_edge = parent_edge[v]
                while True:
                    e = edge_stack.pop()
                    vertex_block_of[e] = next_block
                    if e == tree_edge:
                        break
                next_block += 1
                if low[v] > depth[p]:
                    bridges.add(tree_edge)
                if p != root:
                    cut_vertices.add(p)
        if root_children > 1:
            cut_vertices.add(root)

    # edge-blocks: components after deleting the bridges
    edge_block_of = [-1] * n
    num_edge_blocks = 0
    for s in range(n):
        if edge_block_of[s] != -1:
            continue
        edge_block_of[s] = num_edge_blocks
        frontier = [s]
        while frontier:
            v = frontier.pop()
            for w, eid in adj[v]:
                traversals += 1
                if edge_block_of[w] == -1 and eid not in bridges:
                    edge_block_of[w] = num_edge_blocks
                    frontier.append(w)
        num_edge_blocks += 1

    edge_ok = num_components == 1 and not bridges and n >= 3
    return ConnectivityReport(
        num_vertices=n,
        num_components=num_components,
        component_of=tuple(component_of),
        bridges=frozenset(bridges),
        cut_vertices=frozenset(cut_vertices),
        vertex_block_of=vertex_block_of,
        isolated_block_of=isolated_block_of,
        num_vertex_blocks=next_block,
        edge_block_of=tuple(edge_block_of),
        num_edge_blocks=num_edge_blocks,
        edge_biconnected=edge_ok,
        vertex_biconnected=edge_ok and not cut_vertices,
        traversals=traversals,
    )


def is_biconnected(report: ConnectivityReport, mode: Mode | str) -> bool:
    if Mode(mode) is Mode.EDGE:
        return report.edge_biconnected
    return report.vertex_biconnected
