"""Command line entry point: ``mlbp check|solve|greedy|grasp|gen|bench``.

Exit codes: 0 success (bi-connected / optimal / feasible), 1 usage or I/O
error, 2 infeasible instance, 3 ``check`` found the graph not bi-connected,
4 ``solve`` stopped by a limit before proving optimality.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .connectivity import analyze, is_biconnected
from .exact import SolverConfig, solve_exact
from .graph import LabelSet, Mode
from .heuristic import GraspConfig, GreedyStep, InfeasibleError, grasp, greedy_construct, prune_labels
from .instances import (
    FeasibilityRetriesExhaustedError,
    InstanceFormatError,
    InstanceSpec,
    RESULT_CSV_HEADER,
    generate,
    read_instance,
    serialize_result,
    write_instance,
)
from .oracle import TooManyLabelsError, brute_force_optimum
from .results import SolverResult, Status

log = logging.getLogger("mlbp")

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_NOT_BICONNECTED, EXIT_LIMIT = 0, 1, 2, 3, 4

BENCH_HEADER = "n,q,density,seed,method,mode,status,objective,time_ms,nodes"
METHODS = ("exact", "greedy", "grasp", "oracle")

PLAN_HELP = """\
plan file: one 'key = value' per line, '#' starts a comment, lists are comma separated.
  n                 vertex counts, e.g. 20, 30           (required)
  q                 label counts, or 'n' for q = n       (default n)
  density           edge densities in (0, 1]             (required)
  instances         instances per cell                   (default 1)
  methods           subset of exact, greedy, grasp, oracle (default exact, greedy, grasp)
  mode              edge | vertex                        (default edge)
  seed              seed of instance 0; instance i uses seed + i (default 0)
  ensure            none | edge | vertex                 (default: same as mode)
  time_limit_ms     per run limit for exact and grasp    (default none)
  grasp_iterations  (default 20)
  grasp_alpha       (default 3)

output CSV columns: """ + BENCH_HEADER


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _mode(text: str) -> Mode:
    try:
        return Mode(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"mode must be 'edge' or 'vertex', not {text!r}") from None


def _ms(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("time limit must be positive")
    return value / 1000


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mlbp", description="Minimum labelling bi-connectivity solvers.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="print the block structure of an instance")
    c.add_argument("file")
    c.add_argument("--mode", type=_mode, default=Mode.EDGE)

    fmt_help = f"json, or csv (one row with columns {RESULT_CSV_HEADER}, labels space separated)"
    s = sub.add_parser("solve", help="exact branch-and-prune search")
    s.add_argument("file")
    s.add_argument("--mode", type=_mode, required=True)
    s.add_argument("--time-limit", type=_ms, metavar="MS")
    s.add_argument("--node-limit", type=int)
    s.add_argument("--no-greedy-seed", action="store_true")
    s.add_argument("--format", choices=("json", "csv"), default="json", help=fmt_help)

    gr = sub.add_parser("greedy", help="deterministic greedy followed by redundancy pruning")
    gr.add_argument("file")
    gr.add_argument("--mode", type=_mode, required=True)
    gr.add_argument("--format", choices=("json", "csv"), default="json", help=fmt_help)

    gp = sub.add_parser("grasp", help="GRASP metaheuristic")
    gp.add_argument("file")
    gp.add_argument("--mode", type=_mode, required=True)
    gp.add_argument("--iterations", type=int, default=20)
    gp.add_argument("--alpha", type=int, default=3)
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--time-limit", type=_ms, metavar="MS")
    gp.add_argument("--format", choices=("json", "csv"), default="json", help=fmt_help)

    g = sub.add_parser("gen", help="write a random instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--labels", type=int, required=True)
    g.add_argument("--density", type=float, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--ensure", type=_mode)
    g.add_argument("--max-retries", type=int, default=1000)
    g.add_argument("-o", "--output", required=True)

    b = sub.add_parser(
        "bench", help="run a benchmark plan", epilog=PLAN_HELP, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    b.add_argument("--plan", required=True)
    b.add_argument("-o", "--output", required=True)
    b.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    return p


def _emit(result: SolverResult, fmt: str):
    if fmt == "csv":
        sys.stdout.write(RESULT_CSV_HEADER + "\n")
        sys.stdout.write(serialize_result(result, "csv-row"))
    else:
        sys.stdout.write(serialize_result(result, "json"))


def _check(args) -> int:
    g = read_instance(args.file)
    r = analyze(g)
    ok = is_biconnected(r, args.mode)
    print(f"vertices: {g.num_vertices}")
    print(f"edges: {g.num_edges}")
    print(f"components: {r.num_components}")
    print(f"bridges: {sorted((g.edges[e].u, g.edges[e].v) for e in r.bridges)}")
    print(f"cut_vertices: {sorted(r.cut_vertices)}")
    print(f"vertex_blocks: {r.num_vertex_blocks}")
    print(f"edge_blocks: {r.num_edge_blocks}")
    print(f"edge_biconnected: {str(r.edge_biconnected).lower()}")
    print(f"vertex_biconnected: {str(r.vertex_biconnected).lower()}")
    return EXIT_OK if ok else EXIT_NOT_BICONNECTED


def _run_greedy(g, mode: Mode) -> SolverResult:
    start = time.perf_counter()
    try:
        steps: list[GreedyStep] = []
        labels = prune_labels(g, greedy_construct(g, mode, trace=steps), mode)
    except InfeasibleError:
        return SolverResult(mode, Status.INFEASIBLE, LabelSet(g.num_labels), 0, time.perf_counter() - start)
    return SolverResult(mode, Status.FEASIBLE, labels, len(steps), time.perf_counter() - start)


def _solve(args) -> int:
    g = read_instance(args.file)
    cfg = SolverConfig(
        mode=args.mode,
        time_limit=args.time_limit,
        node_limit=args.node_limit,
        seed_incumbent_with_greedy=not args.no_greedy_seed,
    )
    result = solve_exact(g, cfg)
    _emit(result, args.format)
    return {Status.OPTIMAL: EXIT_OK, Status.INFEASIBLE: EXIT_INFEASIBLE, Status.FEASIBLE: EXIT_LIMIT}[result.status]


def _greedy(args) -> int:
    result = _run_greedy(read_instance(args.file), args.mode)
    _emit(result, args.format)
    return EXIT_INFEASIBLE if result.status is Status.INFEASIBLE else EXIT_OK


def _grasp(args) -> int:
    g = read_instance(args.file)
    cfg = GraspConfig(args.mode, args.iterations, args.alpha, args.seed, args.time_limit)
    result = grasp(g, cfg)
    _emit(result, args.format)
    return EXIT_INFEASIBLE if result.status is Status.INFEASIBLE else EXIT_OK


def _gen(args) -> int:
    spec = InstanceSpec(args.n, args.labels, args.density, args.seed, args.ensure, args.max_retries)
    g = generate(spec)
    write_instance(g, args.output)
    log.info("wrote %s: n=%d m=%d q=%d", args.output, g.num_vertices, g.num_edges, g.num_labels)
    return EXIT_OK


@dataclass
class BenchPlan:
    n: list[int]
    density: list[float]
    q: list[int] | None = None  # None means q = n
    instances: int = 1
    methods: list[str] = field(default_factory=lambda: ["exact", "greedy", "grasp"])
    mode: Mode = Mode.EDGE
    seed: int = 0
    ensure: Mode | None = None
    time_limit: float | None = None
    grasp_iterations: int = 20
    grasp_alpha: int = 3

    def __post_init__(self):
        if not self.methods:
            raise ValueError("plan needs at least one method")
        unknown = set(self.methods) - set(METHODS)
        if unknown:
            raise ValueError(f"unknown methods {sorted(unknown)}")
        if self.instances < 1:
            raise ValueError("instances must be >= 1")

    def cells(self) -> list[tuple[int, int, float]]:
        out = []
        for n, d in product(self.n, self.density):
            for q in self.q or [n]:
                out.append((n, q, d))
        return out


def parse_plan(text: str) -> BenchPlan:
    raw: dict[str, str] = {}
    for no, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"plan line {no}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        raw[key] = value

    def items(key):
        return [s.strip() for s in raw.pop(key).split(",") if s.strip()]

    if "n" not in raw or "density" not in raw:
        raise ValueError("plan needs 'n' and 'density'")
    kw: dict = {"n": [int(x) for x in items("n")], "density": [float(x) for x in items("density")]}
    if "q" in raw:
        qs = items("q")
        kw["q"] = None if qs == ["n"] else [int(x) for x in qs]
    if "instances" in raw:
        kw["instances"] = int(raw.pop("instances"))
    if "methods" in raw:
        kw["methods"] = items("methods")
    if "mode" in raw:
        kw["mode"] = Mode(raw.pop("mode"))
    if "seed" in raw:
        kw["seed"] = int(raw.pop("seed"))
    ensure = raw.pop("ensure", None)
    kw["ensure"] = kw.get("mode", Mode.EDGE) if ensure is None else (None if ensure == "none" else Mode(ensure))
    if "time_limit_ms" in raw:
        kw["time_limit"] = float(raw.pop("time_limit_ms")) / 1000
    if "grasp_iterations" in raw:
        kw["grasp_iterations"] = int(raw.pop("grasp_iterations"))
    if "grasp_alpha" in raw:
        kw["grasp_alpha"] = int(raw.pop("grasp_alpha"))
    if raw:
        raise ValueError(f"unknown plan keys {sorted(raw)}")
    return BenchPlan(**kw)


def _run_method(g, method: str, plan: BenchPlan) -> SolverResult | None:
    mode = plan.mode
    if method == "exact":
        return solve_exact(g, SolverConfig(mode=mode, time_limit=plan.time_limit))
    if method == "greedy":
        return _run_greedy(g, mode)
    if method == "grasp":
        cfg = GraspConfig(mode, plan.grasp_iterations, plan.grasp_alpha, 0, plan.time_limit)
        return grasp(g, cfg)
    try:
        return brute_force_optimum(g, mode)
    except TooManyLabelsError:
        return None


def _bench_task(task) -> list[tuple]:
    (n, q, d), seed, plan = task
    keys = (n, q, d, seed)
    spec = InstanceSpec(n, q, d, seed, plan.ensure)
    try:
        g = generate(spec)
    except FeasibilityRetriesExhaustedError:
        return [(*keys, m, plan.mode.value, "no_instance", "", "", "") for m in plan.methods]
    rows = []
    for m in plan.methods:
        r = _run_method(g, m, plan)
        if r is None:
            rows.append((*keys, m, plan.mode.value, "skipped", "", "", ""))
        else:
            rows.append((*keys, m, r.mode.value, r.status.value, r.objective, round(r.elapsed * 1000, 3), r.nodes_explored))
    return rows


def run_bench(plan: BenchPlan, jobs: int = 1) -> list[tuple]:
    tasks = [(cell, plan.seed + i, plan) for cell in plan.cells() for i in range(plan.instances)]
    rows: list[tuple] = []
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            for chunk in pool.map(_bench_task, tasks):
                rows.extend(chunk)
    else:
        for t in tasks:
            chunk = _bench_task(t)
            for row in chunk:
                log.info("%s", ",".join(map(str, row)))
            rows.extend(chunk)
    rows.sort(key=lambda r: r[:5])
    return rows


def _bench(args) -> int:
    with open(args.plan, encoding="utf-8") as fh:
        plan = parse_plan(fh.read())
    rows = run_bench(plan, args.jobs)
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(BENCH_HEADER + "\n")
        for row in rows:
            fh.write(",".join(map(str, row)) + "\n")
    return EXIT_OK


COMMANDS = {"check": _check, "solve": _solve, "greedy": _greedy, "grasp": _grasp, "gen": _gen, "bench": _bench}


def run_cli(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except (OSError, InstanceFormatError, FeasibilityRetriesExhaustedError, ValueError) as exc:
        print(f"mlbp: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
