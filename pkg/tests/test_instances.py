import json
import math
from fractions import Fraction

import pytest
from hypothesis import given

from mlbp import (
    InstanceSpec,
    LabelSet,
    Mode,
    SolverResult,
    Status,
    feasibility_check,
    generate,
    parse_instance,
    serialize_instance,
    serialize_result,
)
from mlbp.graph import DuplicateEdgeError, SelfLoopError
from mlbp.instances import (
    DensityOutOfRangeError,
    EdgeCountMismatchError,
    FeasibilityRetriesExhaustedError,
    InstanceFormatError,
)

from conftest import labeled_graphs, triangle


def test_parse_triangle():
    assert parse_instance("3 3 3\n0 1 0\n1 2 1\n0 2 2\n") == triangle()


def test_parse_comments_blank_lines_crlf():
    g = parse_instance("# comment\r\n\r\n3 2 1\r\n0 1 0\r\n  # more\r\n1 2 0\r\n")
    assert g.num_edges == 2 and {e.label for e in g.edges} == {0}


def test_parse_self_loop_reports_line():
    with pytest.raises(InstanceFormatError) as info:
        parse_instance("3 1 1\n0 0 0\n")
    assert info.value.line_no == 2
    assert isinstance(info.value.__cause__, SelfLoopError)


def test_parse_duplicate_reports_line():
    with pytest.raises(InstanceFormatError) as info:
        parse_instance("# x\n3 2 1\n0 1 0\n\n1 0 0\n")
    assert info.value.line_no == 5
    assert isinstance(info.value.__cause__, DuplicateEdgeError)


@pytest.mark.parametrize(
    "text",
    ["", "3 3\n", "3 1 1\n0 1\n", "3 1 1\n0 x 0\n", "3 1 1\n0 -1 0\n", "0 0 1\n", "3 0 0\n"],
)
def test_parse_malformed(text):
    with pytest.raises(InstanceFormatError):
        parse_instance(text)


@pytest.mark.parametrize("text", ["3 2 1\n0 1 0\n", "3 1 1\n0 1 0\n1 2 0\n"])
def test_parse_edge_count_mismatch(text):
    with pytest.raises(EdgeCountMismatchError):
        parse_instance(text)


def test_serialize_triangle():
    assert serialize_instance(triangle()) == "3 3 3\n0 1 0\n0 2 2\n1 2 1\n"


def test_serialize_edgeless():
    g = parse_instance("2 0 1\n")
    assert serialize_instance(g) == "2 0 1\n"


@given(labeled_graphs(max_n=15, max_q=10))
def test_round_trip(g):
    h = parse_instance(serialize_instance(g))
    assert set(h.edges) == set(g.edges)
    assert (h.num_vertices, h.num_labels) == (g.num_vertices, g.num_labels)
    assert serialize_instance(h) == serialize_instance(g)


def test_generate_complete_graph():
    g = generate(InstanceSpec(n=5, q=3, density=1.0, seed=42))
    assert g.num_edges == 10


def test_generate_triangle_vertex_feasible():
    g = generate(InstanceSpec(n=3, q=1, density=1.0, seed=0, ensure_feasible=Mode.VERTEX))
    assert g.num_edges == 3 and feasibility_check(g, "vertex")


def test_generate_too_sparse_exhausts_retries():
    spec = InstanceSpec(n=20, q=20, density=0.05, seed=1, ensure_feasible=Mode.EDGE, max_retries=50)
    assert spec.num_edges == 9
    with pytest.raises(FeasibilityRetriesExhaustedError) as info:
        generate(spec)
    assert info.value.attempts == 50


@pytest.mark.parametrize("density", [0.0, -0.1, 1.5])
def test_generate_density_range(density):
    with pytest.raises(DensityOutOfRangeError):
        generate(InstanceSpec(n=5, q=2, density=density))


@pytest.mark.parametrize("n,density", [(10, 0.3), (20, 0.2), (30, 0.5), (50, 0.8), (100, 0.29)])
def test_generate_respects_edge_count(n, density):
    for seed in range(3):
        g = generate(InstanceSpec(n=n, q=n, density=density, seed=seed))
        assert g.num_edges == math.floor(Fraction(str(density)) * n * (n - 1) / 2)
        assert len({(e.u, e.v) for e in g.edges}) == g.num_edges
        assert all(e.u < e.v for e in g.edges)


def test_generate_deterministic_and_ensured():
    for mode in Mode:
        spec = InstanceSpec(n=12, q=6, density=0.4, seed=3, ensure_feasible=mode)
        g = generate(spec)
        assert g == generate(spec)
        assert feasibility_check(g, mode)


def test_serialize_result_json():
    r = SolverResult(Mode.EDGE, Status.OPTIMAL, LabelSet.of(3, [1, 0]), 7, 0.0123)
    text = serialize_result(r)
    assert text.endswith("\n")
    assert '"labels":[0,1]' in text
    rec = json.loads(text)
    assert list(rec) == ["mode", "status", "labels", "size", "nodes_explored", "time_ms"]
    assert rec == {"mode": "edge", "status": "optimal", "labels": [0, 1], "size": 2, "nodes_explored": 7, "time_ms": 12.3}


def test_serialize_result_infeasible_and_limit():
    rec = json.loads(serialize_result(SolverResult(Mode.VERTEX, Status.INFEASIBLE, LabelSet(4))))
    assert rec["size"] == 0 and rec["labels"] == []
    rec = json.loads(serialize_result(SolverResult(Mode.VERTEX, Status.FEASIBLE, LabelSet.of(4, [2]))))
    assert rec["status"] == "feasible"


def test_serialize_result_csv():
    r = SolverResult(Mode.EDGE, Status.OPTIMAL, LabelSet.of(5, [4, 1]), 3, 0.002)
    assert serialize_result(r, "csv-row") == "edge,optimal,2,1 4,3,2.0\n"
    with pytest.raises(ValueError):
        serialize_result(r, "xml")
