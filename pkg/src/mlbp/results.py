from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import LabelSet, Mode


class Status(str, Enum):
    OPTIMAL = "optimal"
    FEASIBLE = "feasible"  # heuristic answer, or a search stopped by a limit
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class SolverResult:
    mode: Mode
    status: Status
    labels: LabelSet
    nodes_explored: int = 0
    elapsed: float = 0.0  # seconds

    @property
    def objective(self) -> int:
        return len(self.labels)
