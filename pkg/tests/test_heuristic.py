import random

import numpy as np
import pytest

from mlbp import (
    GraspConfig,
    InfeasibleError,
    LabelSet,
    SolverConfig,
    Status,
    analyze,
    feasibility_check,
    grasp,
    greedy_construct,
    induced_subgraph,
    is_biconnected,
    local_search,
    prune_labels,
    solve_exact,
)
from mlbp.heuristic import GreedyStep

from conftest import bowtie, c4, path3, random_graph, triangle


def feasible(g, labels, mode):
    return is_biconnected(analyze(induced_subgraph(g, labels)), mode)


def test_greedy_c4_trace():
    steps = []
    labels = greedy_construct(c4(), "edge", trace=steps)
    # tie at 2 components + 4 edge-blocks goes to the smaller id
    assert steps == [GreedyStep(0, 6, False), GreedyStep(1, 2, False)]
    assert labels.sorted() == [0, 1]


def test_greedy_bowtie_single_label():
    assert greedy_construct(bowtie(), "edge").sorted() == [0]


def test_greedy_triangle_vertex():
    steps = []
    assert greedy_construct(triangle(), "vertex", trace=steps).sorted() == [0, 1, 2]
    assert [s.score for s in steps] == [4, 3, 2]


def test_greedy_rejects_infeasible_host():
    with pytest.raises(InfeasibleError):
        greedy_construct(path3(), "edge")
    with pytest.raises(InfeasibleError):
        greedy_construct(bowtie(), "vertex")


def test_prune_examples():
    assert prune_labels(c4(), LabelSet.of(2, [0, 1]), "edge").sorted() == [0, 1]
    assert prune_labels(triangle(), LabelSet.full(3), "vertex").sorted() == [0, 1, 2]
    g = bowtie((0, 0, 0, 0, 0, 0))
    g2 = g.__class__(g.num_vertices, 3, g.edges, g.adjacency)
    assert prune_labels(g2, LabelSet.full(3), "edge").sorted() == [0]
    with pytest.raises(InfeasibleError):
        prune_labels(c4(), LabelSet.of(2, [0]), "edge")


def _feasible_instances(seed, count, mode, n_range=(4, 11), q_range=(2, 9)):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_graph(rng, rng.randrange(*n_range), rng.choice([0.5, 0.7, 0.9]), q=rng.randrange(*q_range))
        if feasibility_check(g, mode):
            out.append(g)
    return out


@pytest.mark.parametrize("mode", ["edge", "vertex"])
def test_greedy_progress_and_feasibility(mode):
    for g in _feasible_instances(21, 30, mode):
        steps = []
        labels = greedy_construct(g, mode, trace=steps)
        assert feasible(g, labels, mode)
        assert steps[-1].score == 2
        prev = None
        for s in steps:
            if prev is not None and not s.plateau:
                assert s.score < prev
            prev = s.score
        pruned = prune_labels(g, labels, mode)
        assert pruned <= labels and feasible(g, pruned, mode)
        for c in pruned:
            assert not feasible(g, pruned.remove(c), mode)


@pytest.mark.parametrize("mode", ["edge", "vertex"])
def test_randomized_greedy_feasible(mode):
    for i, g in enumerate(_feasible_instances(22, 15, mode)):
        rng = np.random.default_rng(i)
        assert feasible(g, greedy_construct(g, mode, rng=rng, rcl_size=3), mode)


def test_local_search_never_worse():
    for g in _feasible_instances(23, 15, "edge"):
        start = LabelSet.full(g.num_labels)
        out = local_search(g, start, "edge")
        assert feasible(g, out, "edge") and len(out) <= len(prune_labels(g, start, "edge"))


def test_grasp_c4_any_seed():
    for seed in range(5):
        r = grasp(c4(), GraspConfig(mode="edge", iterations=5, alpha=2, seed=seed))
        assert r.status is Status.FEASIBLE and r.objective == 2


def test_grasp_infeasible_host():
    r = grasp(path3(), GraspConfig(mode="edge", iterations=3))
    assert r.status is Status.INFEASIBLE and r.objective == 0


@pytest.mark.parametrize("mode", ["edge", "vertex"])
def test_sandwich(mode):
    for g in _feasible_instances(24, 20, mode):
        exact = solve_exact(g, SolverConfig(mode=mode))
        heur = grasp(g, GraspConfig(mode=mode, iterations=5, alpha=2, seed=1))
        greedy = prune_labels(g, greedy_construct(g, mode), mode)
        assert exact.objective <= heur.objective <= len(greedy)
        assert feasible(g, heur.labels, mode)


def test_grasp_seed_determinism():
    g = _feasible_instances(25, 1, "vertex", n_range=(9, 11), q_range=(6, 9))[0]
    cfg = GraspConfig(mode="vertex", iterations=8, alpha=3, seed=99)
    assert grasp(g, cfg).labels == grasp(g, cfg).labels


def test_grasp_config_validation():
    with pytest.raises(ValueError):
        GraspConfig(iterations=0)
    with pytest.raises(ValueError):
        GraspConfig(alpha=0)
