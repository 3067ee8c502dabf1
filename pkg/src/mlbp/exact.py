"""Exact minimum-cardinality search over label subsets.

Labels are ordered by decreasing edge count (ties by id) and subsets are
enumerated as combinations: a node only extends its set with labels that come
later in that order, so every subset is visited at most once. Each node is
checked with a from-scratch :func:`~mlbp.connectivity.analyze`.

Prunes, all exactness-preserving:

* a node that is not bi-connected and already has ``best - 1`` labels or more
  cannot lead to a strictly smaller solution;
* if the node plus every label still available to it is not bi-connected,
  no descendant is;
* labels that label no edge are never branched on.

A bi-connected node is never extended, since its supersets are larger.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .connectivity import analyze, is_biconnected
from .graph import LabeledGraph, LabelSet, Mode, induced_subgraph, label_frequencies
from .heuristic import greedy_construct, prune_labels
from .results import SolverResult, Status


@dataclass(frozen=True)
class SolverConfig:
    mode: Mode = Mode.EDGE
    time_limit: float | None = None  # seconds
    node_limit: int | None = None
    seed_incumbent_with_greedy: bool = True
    prune: bool = True  # off only for differential testing

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")


def feasibility_check(g: LabeledGraph, mode: Mode | str) -> bool:
    return is_biconnected(analyze(g), mode)


class _LimitReached(Exception):
    pass


class _Search:
    def __init__(self, g: LabeledGraph, config: SolverConfig, order: list[int]):
        self.g = g
        self.config = config
        self.order = order
        self.best: LabelSet | None = None
        self.best_size = len(order) + 1
        self.nodes = 0
        self.start = time.perf_counter()

    def feasible(self, labels: LabelSet) -> bool:
        return is_biconnected(analyze(induced_subgraph(self.g, labels)), self.config.mode)

    def tick(self):
        cfg = self.config
        if cfg.node_limit is not None and self.nodes >= cfg.node_limit:
            raise _LimitReached
        if cfg.time_limit is not None and time.perf_counter() - self.start > cfg.time_limit:
            raise _LimitReached
        self.nodes += 1

    def visit(self, labels: LabelSet, nxt: int):
        """Explore ``labels`` and its extensions by ``order[nxt:]``."""
        self.tick()
        prune = self.config.prune
        size = len(labels)
        if self.feasible(labels):
            if size < self.best_size:
                self.best, self.best_size = labels, size
            if prune:
                return
        elif prune:
            if size >= self.best_size - 1:
                return
            rest = labels
            for c in self.order[nxt:]:
                rest = rest.add(c)
            if not self.feasible(rest):
                return
        for j in range(nxt, len(self.order)):
            if prune and size + 1 >= self.best_size:
                return
            self.visit(labels.add(self.order[j]), j + 1)


def solve_exact(g: LabeledGraph, config: SolverConfig | None = None) -> SolverResult:
    config = config or SolverConfig()
    mode = config.mode
    start = time.perf_counter()
    q = g.num_labels
    if not feasibility_check(g, mode):
        return SolverResult(mode, Status.INFEASIBLE, LabelSet(q), 0, time.perf_counter() - start)

    freq = label_frequencies(g)
    labels = range(q) if not config.prune else [c for c in range(q) if freq[c]]
    order = sorted(labels, key=lambda c: (-freq[c], c))
    search = _Search(g, config, order)
    if config.seed_incumbent_with_greedy:
        seed = prune_labels(g, greedy_construct(g, mode), mode)
        search.best, search.best_size = seed, len(seed)

    status = Status.OPTIMAL
    try:
        search.visit(LabelSet(q), 0)
    except _LimitReached:
        status = Status.FEASIBLE
    best = search.best
    if best is None:
        # limit hit before any solution; the used labels are feasible
        best = LabelSet.of(q, (c for c in range(q) if freq[c]))
    return SolverResult(mode, status, best, search.nodes, time.perf_counter() - start)
