"""Greedy construction and GRASP for minimum labelling bi-connectivity.

The greedy function of a partial label set is the number of connected
components plus the number of blocks of the kind the mode asks for
(edge-blocks or vertex-blocks). It equals 2 exactly when the induced subgraph
is bi-connected.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .connectivity import analyze, is_biconnected
from .graph import LabeledGraph, LabelSet, Mode, induced_subgraph, label_frequencies
from .incremental import IncrementalState
from .results import SolverResult, Status


class InfeasibleError(ValueError):
    """The host graph (or the given label set) is not bi-connected in the requested mode."""


@dataclass(frozen=True)
class GraspConfig:
    mode: Mode = Mode.EDGE
    iterations: int = 50
    alpha: int = 3
    seed: int = 0
    time_limit: float | None = None  # seconds

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.alpha < 1:
            raise ValueError("alpha must be >= 1")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


@dataclass(frozen=True)
class GreedyStep:
    label: int
    score: int
    plateau: bool


def greedy_score(state: IncrementalState, mode: Mode) -> int:
    blocks = state.num_edge_blocks if mode is Mode.EDGE else state.num_vertex_blocks
    return state.num_components + blocks


def _feasible(g: LabeledGraph, labels: LabelSet, mode: Mode) -> bool:
    return is_biconnected(analyze(induced_subgraph(g, labels)), mode)


def _extend(
    g: LabeledGraph,
    mode: Mode,
    labels: LabelSet,
    state: IncrementalState,
    rng: np.random.Generator | None,
    rcl_size: int,
    banned: frozenset[int] = frozenset(),
    trace: list[GreedyStep] | None = None,
) -> LabelSet | None:
    """Add labels to ``labels`` (already inserted in ``state``) until feasible.

    Returns None when the allowed labels run out first.
    """
    freq = label_frequencies(g)
    while not state.is_biconnected(mode):
        candidates = [c for c in range(g.num_labels) if freq[c] and c not in labels and c not in banned]
        if not candidates:
            return None
        current = greedy_score(state, mode)
        scored = []
        for c in candidates:
            trial = state.copy()
            trial.add_label(g, c)
            scored.append((greedy_score(trial, mode), c, trial))
        improving = sorted((s for s in scored if s[0] < current), key=lambda s: (s[0], s[1]))
        if improving:
            rcl = improving[:rcl_size]
            pick = rcl[0] if rng is None else rcl[int(rng.integers(len(rcl)))]
            plateau = False
        else:
            # nothing lowers the score: force progress with the largest label
            pick = min(scored, key=lambda s: (-freq[s[1]], s[1]))
            plateau = True
        score, label, state = pick
        labels = labels.add(label)
        if trace is not None:
            trace.append(GreedyStep(label, score, plateau))
    return labels


def greedy_construct(
    g: LabeledGraph,
    mode: Mode | str,
    rng: np.random.Generator | None = None,
    rcl_size: int = 1,
    trace: list[GreedyStep] | None = None,
) -> LabelSet:
    """Build a feasible label set one label at a time.

    Each step picks among the ``rcl_size`` labels with the lowest greedy score
    that strictly improve on the current one (uniformly when ``rng`` is given,
    otherwise the best, ties to the smallest id). When no label improves, the
    label with most edges is added instead.
    """
    mode = Mode(mode)
    if not _feasible(g, LabelSet.full(g.num_labels), mode):
        raise InfeasibleError(f"host graph is not {mode.value}-bi-connected")
    labels = _extend(g, mode, LabelSet(g.num_labels), IncrementalState.new(g.num_vertices), rng, rcl_size, trace=trace)
    assert labels is not None
    return labels


def prune_labels(g: LabeledGraph, labels: LabelSet, mode: Mode | str) -> LabelSet:
    """Drop redundant labels until removing any single one breaks feasibility.

    Candidates are tried from the fewest edges up (ties by id). One pass is
    enough because feasibility is monotone in the label set.
    """
    mode = Mode(mode)
    if not _feasible(g, labels, mode):
        raise InfeasibleError(f"{labels!r} is not {mode.value}-bi-connected")
    freq = label_frequencies(g)
    for c in sorted(labels, key=lambda c: (freq[c], c)):
        smaller = labels.remove(c)
        if _feasible(g, smaller, mode):
            labels = smaller
    return labels


def _state_for(g: LabeledGraph, labels: LabelSet) -> IncrementalState:
    state = IncrementalState.new(g.num_vertices)
    for c in labels:
        state.add_label(g, c)
    return state


def local_search(g: LabeledGraph, labels: LabelSet, mode: Mode | str) -> LabelSet:
    """Prune, then first-improvement 1-swap descent.

    A move drops one label, refills greedily without it, and prunes; it is
    taken only if the result is strictly smaller.
    """
    mode = Mode(mode)
    freq = label_frequencies(g)
    labels = prune_labels(g, labels, mode)
    improved = True
    while improved:
        improved = False
        for c in sorted(labels, key=lambda c: (freq[c], c)):
            rest = labels.remove(c)
            refilled = _extend(g, mode, rest, _state_for(g, rest), None, 1, banned=frozenset([c]))
            if refilled is None:
                continue
            refilled = prune_labels(g, refilled, mode)
            if len(refilled) < len(labels):
                labels = refilled
                improved = True
                break
    return labels


def _better(a: LabelSet, b: LabelSet) -> bool:
    return (len(a), a.sorted()) < (len(b), b.sorted())


def grasp(g: LabeledGraph, config: GraspConfig) -> SolverResult:
    """Multi-start randomized greedy with local search.

    Iteration ``i`` draws from its own Philox stream derived from
    ``(config.seed, i)``, so iterations do not depend on each other's order.
    The incumbent starts as the pruned deterministic greedy solution.
    """
    mode = config.mode
    start = time.perf_counter()
    q = g.num_labels
    if not _feasible(g, LabelSet.full(q), mode):
        return SolverResult(mode, Status.INFEASIBLE, LabelSet(q), 0, time.perf_counter() - start)

    best = prune_labels(g, greedy_construct(g, mode), mode)
    done = 0
    for i in range(config.iterations):
        if config.time_limit is not None and time.perf_counter() - start > config.time_limit:
            break
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(config.seed, spawn_key=(i,))))
        labels = greedy_construct(g, mode, rng=rng, rcl_size=config.alpha)
        labels = local_search(g, labels, mode)
        if _better(labels, best):
            best = labels
        done += 1
    return SolverResult(mode, Status.FEASIBLE, best, done, time.perf_counter() - start)
