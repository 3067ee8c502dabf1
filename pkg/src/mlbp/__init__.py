"""Minimum labelling bi-connectivity: exact search, greedy and GRASP."""

from .connectivity import ConnectivityReport, analyze, is_biconnected
from .exact import SolverConfig, feasibility_check, solve_exact
from .graph import (
    Edge,
    LabeledGraph,
    LabelSet,
    Mode,
    SubgraphView,
    build_graph,
    edge_subgraph,
    induced_subgraph,
    label_frequencies,
)
from .heuristic import GraspConfig, InfeasibleError, grasp, greedy_construct, local_search, prune_labels
from .incremental import IncrementalState, new_state, snapshot_counters
from .instances import InstanceSpec, generate, parse_instance, serialize_instance, serialize_result
from .oracle import brute_force_optimum, naive_bridges, naive_cut_vertices
from .results import SolverResult, Status

__all__ = [
    "ConnectivityReport", "Edge", "GraspConfig", "IncrementalState", "InfeasibleError", "InstanceSpec",
    "LabelSet", "LabeledGraph", "Mode", "SolverConfig", "SolverResult", "Status", "SubgraphView",
    "analyze", "brute_force_optimum", "build_graph", "edge_subgraph", "feasibility_check", "generate",
    "grasp", "greedy_construct", "induced_subgraph", "is_biconnected", "label_frequencies", "local_search",
    "naive_bridges", "naive_cut_vertices", "new_state", "parse_instance", "prune_labels",
    "serialize_instance", "serialize_result", "snapshot_counters", "solve_exact",
]
