"""Instance text format, random instance generation and result serialization.

Instance files are plain text. Blank lines and lines starting with ``#`` are
ignored. The first remaining line is ``n m q`` and it is followed by exactly
``m`` lines ``u v c``: an edge between vertices ``u`` and ``v`` (0-based)
carrying label ``c`` (0-based).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .connectivity import analyze, is_biconnected
from .graph import GraphError, LabeledGraph, Mode, build_graph
from .results import SolverResult


class InstanceFormatError(ValueError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class EdgeCountMismatchError(InstanceFormatError):
    pass


class DensityOutOfRangeError(ValueError):
    pass


class FeasibilityRetriesExhaustedError(RuntimeError):
    def __init__(self, attempts: int, mode: Mode):
        super().__init__(f"no {mode.value}-bi-connected instance after {attempts} attempts")
        self.attempts = attempts


def _ints(line_no: int, text: str, count: int) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise InstanceFormatError(line_no, f"expected {count} integers, got {len(parts)}")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise InstanceFormatError(line_no, f"not an integer in {text.strip()!r}") from None
    if any(x < 0 for x in values):
        raise InstanceFormatError(line_no, "negative value")
    return values


def parse_instance(text: str) -> LabeledGraph:
    rows = [
        (no, line)
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise InstanceFormatError(1, "missing 'n m q' header")
    header_no, header = rows[0]
    n, m, q = _ints(header_no, header, 3)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_no
        raise EdgeCountMismatchError(last, f"header announces {m} edges, found {len(body)}")
    edges = [_ints(no, line, 3) for no, line in body]
    try:
        return build_graph(n, q, edges)
    except GraphError as err:
        line_no = body[err.edge_index][0] if err.edge_index is not None else header_no
        raise InstanceFormatError(line_no, str(err)) from err
    except ValueError as err:
        raise InstanceFormatError(header_no, str(err)) from err


def serialize_instance(g: LabeledGraph) -> str:
    lines = [f"{g.num_vertices} {g.num_edges} {g.num_labels}"]
    for e in sorted(g.edges, key=lambda e: (e.u, e.v)):
        lines.append(f"{e.u} {e.v} {e.label}")
    return "\n".join(lines) + "\n"


def read_instance(path) -> LabeledGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def write_instance(g: LabeledGraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_instance(g))


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    q: int
    density: float
    seed: int = 0
    ensure_feasible: Mode | None = None
    max_retries: int = 1000

    @property
    def num_edges(self) -> int:
        # tolerance keeps e.g. 0.29 * 100 from flooring to 28
        return math.floor(self.density * self.n * (self.n - 1) / 2 + 1e-9)


def _sample(spec: InstanceSpec, rng: np.random.Generator) -> LabeledGraph:
    us, vs = np.triu_indices(spec.n, k=1)
    picks = rng.choice(len(us), size=spec.num_edges, replace=False)
    labels = rng.integers(0, spec.q, size=len(picks))
    edges = zip(us[picks].tolist(), vs[picks].tolist(), labels.tolist())
    return build_graph(spec.n, spec.q, edges)


def generate(spec: InstanceSpec) -> LabeledGraph:
    """Random instance with exactly ``floor(density * n(n-1)/2)`` edges.

    Pairs are drawn uniformly without replacement and labels uniformly from
    ``0..q-1``. With ``ensure_feasible`` set, whole instances are redrawn with
    sub-seeds ``(seed, 1)``, ``(seed, 2)``, ... until one is bi-connected.
    """
    if not 0 < spec.density <= 1:
        raise DensityOutOfRangeError(f"density {spec.density} not in (0, 1]")
    if spec.n < 1 or spec.q < 1:
        raise ValueError("n and q must be positive")
    mode = Mode(spec.ensure_feasible) if spec.ensure_feasible else None
    attempts = 1 if mode is None else spec.max_retries
    for attempt in range(attempts):
        rng = np.random.default_rng([spec.seed, attempt])
        g = _sample(spec, rng)
        if mode is None or is_biconnected(analyze(g), mode):
            return g
    raise FeasibilityRetriesExhaustedError(attempts, mode)


RESULT_CSV_HEADER = "mode,status,size,labels,nodes_explored,time_ms"


def result_record(r: SolverResult) -> dict:
    return {
        "mode": r.mode.value,
        "status": r.status.value,
        "labels": r.labels.sorted(),
        "size": r.objective,
        "nodes_explored": r.nodes_explored,
        "time_ms": round(r.elapsed * 1000, 3),
    }


def serialize_result(r: SolverResult, fmt: str = "json") -> str:
    """JSON object, or one CSV row matching :data:`RESULT_CSV_HEADER`.

    Labels in the CSV row are space-separated.
    """
    rec = result_record(r)
    if fmt == "json":
        return json.dumps(rec, separators=(",", ":")) + "\n"
    if fmt == "csv-row":
        labels = " ".join(map(str, rec["labels"]))
        return f"{rec['mode']},{rec['status']},{rec['size']},{labels},{rec['nodes_explored']},{rec['time_ms']}\n"
    raise ValueError(f"unknown result format {fmt!r}")
