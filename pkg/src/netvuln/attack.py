"""Center-based node-removal attacks.

An attack repeatedly deletes a whole tier of equally central nodes and records
the size of the largest connected component (LCC) after each deletion, until
the LCC has at most three nodes.

* Recalculated attacks (RB, RC, RD, RM) recompute the most central tier on the
  current LCC before every deletion.
* Initial attacks (IB, IC, ID, IM) rank the untouched network once and delete
  its tiers in order, including members that have since been cut off from the
  LCC.
"""
import enum
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .centrality import CentralityKind, central_set, centrality_tiers
from .errors import DomainError, InvalidArgumentError, NetVulnError
from .generators import extract_giant
from .graph import is_connected, largest_connected_component, remove_nodes

DESTRUCTION_SIZE = 3


class Info(enum.Enum):
    INITIAL = "I"
    RECALCULATED = "R"


@dataclass(frozen=True)
class AttackStrategy:
    info: Info
    kind: CentralityKind

    @property
    def code(self):
        return self.info.value + self.kind.letter

    @classmethod
    def from_code(cls, code):
        code = code.strip().upper()
        if len(code) != 2 or code[0] not in "IR" or code[1] not in "BCDM":
            raise InvalidArgumentError(f"unknown strategy code {code!r}")
        return cls(Info(code[0]), CentralityKind.from_letter(code[1]))

    def __str__(self):
        return self.code


ALL_STRATEGIES = tuple(AttackStrategy.from_code(c) for c in ("IB", "IC", "ID", "IM", "RB", "RC", "RD", "RM"))


def parse_strategies(text):
    """``"RB,RM"`` -> strategies; ``"all"`` -> the eight strategies."""
    if text.strip().lower() == "all":
        return list(ALL_STRATEGIES)
    return [AttackStrategy.from_code(c) for c in text.split(",") if c.strip()]


@dataclass(frozen=True)
class TraceRow:
    iteration: int
    removed: frozenset
    removed_cum: int
    f: float
    lcc_size: int
    lcc_prime: float


@dataclass
class AttackTrace:
    strategy: AttackStrategy
    initial_n: int
    rows: list = field(default_factory=list)
    destructive: bool = True
    source: str = ""
    seed: object = None

    @property
    def final(self):
        return self.rows[-1]

    @property
    def iterations(self):
        return len(self.rows) - 1

    def curve(self):
        """``(f, lcc_prime)`` points, one per row."""
        return [(r.f, r.lcc_prime) for r in self.rows]


@dataclass(frozen=True)
class AttackSummary:
    destruction_f: float
    robustness_index: float
    iterations: int


def _start(g, strategy):
    if g.n <= DESTRUCTION_SIZE:
        raise DomainError(f"graph with {g.n} nodes is already destroyed")
    if not is_connected(g):
        raise DomainError("attacks need a connected graph; extract the giant component first")
    trace = AttackTrace(strategy, g.n)
    trace.rows.append(TraceRow(0, frozenset(), 0, 0.0, g.n, 1.0))
    return trace


def _record(trace, removed, g):
    last = trace.rows[-1]
    cum = last.removed_cum + len(removed)
    lcc, size = largest_connected_component(g)
    n0 = trace.initial_n
    trace.rows.append(TraceRow(last.iteration + 1, frozenset(removed), cum, cum / n0, size, size / n0))
    return lcc, size


def run_recalculated(g, kind):
    kind = CentralityKind(kind)
    trace = _start(g, AttackStrategy(Info.RECALCULATED, kind))
    lcc, size = largest_connected_component(g)
    while size > DESTRUCTION_SIZE:
        victims = central_set(g.subgraph(lcc), kind)
        g = remove_nodes(g, victims)
        lcc, size = _record(trace, victims, g)
    return trace


def run_initial(g, kind):
    kind = CentralityKind(kind)
    trace = _start(g, AttackStrategy(Info.INITIAL, kind))
    size = g.n
    for _, tier in centrality_tiers(g, kind):
        victims = tier & g.nodes
        if not victims:
            continue
        g = remove_nodes(g, victims)
        _, size = _record(trace, victims, g)
        if size <= DESTRUCTION_SIZE:
            break
    trace.destructive = size <= DESTRUCTION_SIZE
    return trace


def run_attack(g, strategy, source="", seed=None):
    if isinstance(strategy, str):
        strategy = AttackStrategy.from_code(strategy)
    runner = run_initial if strategy.info is Info.INITIAL else run_recalculated
    trace = runner(g, strategy.kind)
    trace.source = source
    trace.seed = seed
    return trace


def summarize(trace):
    lccs = [r.lcc_prime for r in trace.rows]
    return AttackSummary(
        destruction_f=trace.final.f,
        robustness_index=sum(lccs) / len(lccs),
        iterations=trace.iterations,
    )


@dataclass
class SweepResult:
    strategy: AttackStrategy
    seed: int
    trace: AttackTrace = None
    error: str = None

    @property
    def ok(self):
        return self.error is None


def _sweep_task(spec, strategy, seed):
    try:
        g = extract_giant(spec.with_seed(seed).build())
        trace = run_attack(g, strategy, source=spec.name, seed=seed)
        return SweepResult(strategy, seed, trace)
    except NetVulnError as exc:
        return SweepResult(strategy, seed, error=f"{type(exc).__name__}: {exc}")


def sweep(spec, strategies, runs, base_seed=0, workers=None):
    """Attack ``runs`` independently generated graphs with every strategy.

    Run ``r`` uses seed ``base_seed + r`` and attacks the giant component of
    the generated graph. Results are ordered by (strategy position, seed)
    whatever ``workers`` is; a failing run is reported in its result's
    ``error`` and does not stop the others.
    """
    if runs < 1:
        raise InvalidArgumentError("runs must be at least 1")
    strategies = [AttackStrategy.from_code(s) if isinstance(s, str) else s for s in strategies]
    tasks = [(spec, s, base_seed + r) for s in strategies for r in range(runs)]
    if workers is None:
        workers = 1
    elif workers <= 0:
        workers = os.cpu_count() or 1
    if workers == 1:
        return [_sweep_task(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_sweep_task, *zip(*tasks)))


def mean_destruction(results):
    """Mean destruction fraction per strategy code over successful runs."""
    acc = defaultdict(list)
    for res in results:
        if res.ok:
            acc[res.strategy.code].append(res.trace.final.f)
    return {code: sum(v) / len(v) for code, v in acc.items()}
