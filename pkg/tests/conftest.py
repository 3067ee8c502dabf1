import random

import pytest
from hypothesis import strategies as st

from mlbp import build_graph


def triangle():
    return build_graph(3, 3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)])


def path3():
    return build_graph(3, 2, [(0, 1, 0), (1, 2, 1)])


def bowtie(labels=(0, 0, 0, 0, 0, 0)):
    pairs = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]
    return build_graph(5, max(labels) + 1, [(u, v, c) for (u, v), c in zip(pairs, labels)])


def c4():
    # labels a=0, b=1 alternate around the cycle
    return build_graph(4, 2, [(0, 1, 0), (1, 2, 1), (2, 3, 0), (3, 0, 1)])


def k23():
    return build_graph(5, 1, [(u, v, 0) for u in (0, 1) for v in (2, 3, 4)])


@pytest.fixture
def canonical():
    return {"triangle": triangle(), "path": path3(), "bowtie": bowtie(), "c4": c4(), "k23": k23()}


def random_graph(rng: random.Random, n: int, density: float, q: int = 1):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = [p for p in pairs if rng.random() < density]
    rng.shuffle(chosen)
    return build_graph(n, q, [(u, v, rng.randrange(q)) for u, v in chosen])


@st.composite
def labeled_graphs(draw, max_n=12, max_q=6, min_n=1):
    n = draw(st.integers(min_n, max_n))
    q = draw(st.integers(1, max_q))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    labels = draw(st.lists(st.integers(0, q - 1), min_size=len(chosen), max_size=len(chosen)))
    return build_graph(n, q, [(u, v, c) for (u, v), c in zip(chosen, labels)])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
