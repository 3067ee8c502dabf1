"""Slow reference implementations used as ground truth.

Nothing here touches :mod:`mlbp.connectivity`: bridges and cut-vertices are
found by literally deleting each edge or vertex and flood filling again.
"""

from __future__ import annotations

import time
from itertools import combinations

from .graph import LabeledGraph, LabelSet, Mode, induced_subgraph, label_frequencies
from .results import SolverResult, Status


class TooManyLabelsError(ValueError):
    pass


def _reachable(adj, start, skip_edge=-1, skip_vertex=-1) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w, eid in adj[v]:
            if eid == skip_edge or w == skip_vertex or w in seen:
                continue
            seen.add(w)
            todo.append(w)
    return seen


def naive_bridges(view) -> set[int]:
    """Edges whose deletion splits their component."""
    adj = view.adjacency
    found = set()
    for eid in view.edge_ids:
        e = view.edges[eid]
        if e.v not in _reachable(adj, e.u, skip_edge=eid):
            found.add(eid)
    return found


def naive_cut_vertices(view) -> set[int]:
    """Vertices whose deletion splits their component."""
    adj = view.adjacency
    found = set()
    for v in range(view.num_vertices):
        if len(adj[v]) < 2:
            continue
        component = _reachable(adj, v)
        start = adj[v][0][0]
        if len(_reachable(adj, start, skip_vertex=v)) < len(component) - 1:
            found.add(v)
    return found


def naive_is_biconnected(view, mode: Mode | str) -> bool:
    n = view.num_vertices
    if n < 3 or len(_reachable(view.adjacency, 0)) != n:
        return False
    if Mode(mode) is Mode.EDGE:
        return not naive_bridges(view)
    return not naive_cut_vertices(view)


def brute_force_optimum(
    g: LabeledGraph, mode: Mode | str, max_cardinality: int | None = None
) -> SolverResult:
    """Smallest feasible label set, lexicographically first among the optima.

    Subsets are tried by increasing size and in lexicographic order within a
    size; only labels that occur on some edge are considered.
    """
    mode = Mode(mode)
    q = g.num_labels
    if q > 24 and max_cardinality is None:
        raise TooManyLabelsError(f"{q} labels is too many to enumerate; pass max_cardinality")
    start = time.perf_counter()
    used = [c for c, k in enumerate(label_frequencies(g)) if k]
    top = len(used) if max_cardinality is None else min(max_cardinality, len(used))
    tried = 0
    for k in range(top + 1):
        for subset in combinations(used, k):
            tried += 1
            labels = LabelSet.of(q, subset)
            if naive_is_biconnected(induced_subgraph(g, labels), mode):
                return SolverResult(
                    mode, Status.OPTIMAL, labels, tried, time.perf_counter() - start
                )
    return SolverResult(mode, Status.INFEASIBLE, LabelSet(q), tried, time.perf_counter() - start)
