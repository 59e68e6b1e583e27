"""Desk-scale verification: graph sources, counterexample hunts, lemma suites.

Exhaustive runs can evaluate one representative per isomorphism class. Every
property checked here is invariant under relabelling, so each verdict is
lifted to all labelled graphs of the class with the class size as weight; Hamilton
cycles are transported through the relabelling and re-validated on every
labelled graph (:func:`lift_hamilton_cycles`).
"""

from __future__ import annotations

import itertools
import math
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .engine import (
    Lemma3Input,
    find_hamiltonian,
    hamiltonian_cycle,
    is_heavy_cycle,
    lemma3_check,
    longest_cycles,
    neighbors_on_cycle,
    off_cycle_components,
)
from .graph_core import Graph, GraphError, OrientedCycle, is_k_connected, is_valid_cycle
from .ore import iter_o_cycles, realize_cycle
from .patterns import THEOREMS, heavy_class, hypothesis_holds

EXHAUSTIVE_CAP = 8
LEMMA_CLAUSES = ("a", "b", "c", "d", "e", "f")

# stronger hypothesis => weaker hypothesis, as predicates on every graph
HYPOTHESIS_IMPLICATIONS = (
    ("T1", "T8"),
    ("T2", "T7"),
    ("T3", "T10"),
    ("T4", "T5"),
    ("T5", "T7"),
    ("T7", "T10"),
    ("T8", "T9"),
    ("T9", "T10"),
    ("T6", "T11"),
)
FLAG_IMPLICATIONS = (
    ("claw_free", "two_heavy"),
    ("two_heavy", "o_heavy"),
    ("o_heavy", "one_heavy"),
    ("o_heavy", "k14_o_heavy"),
    ("one_heavy", "k14_o_heavy"),
)


# ------------------------------------------------------------ graph streams

@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Bit ``i`` of an edge mask stands for ``edge_pairs(n)[i]``."""
    return tuple(itertools.combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    adj = [0] * n
    for i, (u, v) in enumerate(edge_pairs(n)):
        if mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, adj)


def mask_from_graph(g: Graph) -> int:
    return sum(1 << i for i, (u, v) in enumerate(edge_pairs(g.n)) if g.has_edge(u, v))


def enumerate_graphs(n: int, min_connectivity: int = 0, allow_large: bool = False) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, in edge-mask order, optionally
    keeping only ``min_connectivity``-connected ones."""
    if n > EXHAUSTIVE_CAP - 1 and not (allow_large and n <= EXHAUSTIVE_CAP):
        raise GraphError(
            f"exhaustive enumeration of n={n} is gated (n=8 needs allow_large); "
            "feed a graph6 file instead"
        )
    for mask in range(1 << len(edge_pairs(n))):
        g = graph_from_mask(n, mask)
        if min_connectivity == 0 or is_k_connected(g, min_connectivity):
            yield g


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős-Rényi ``G(n, p)`` reproducible from ``seed``."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    return Graph.from_edges(n, [e for e in edge_pairs(n) if rng.random() < p])


class OrbitTable:
    """Isomorphism classes of all labelled graphs on ``n`` vertices.

    ``cls[mask]`` is the class index of the labelled graph ``mask``;
    ``perm[mask]`` indexes a permutation ``pi`` with ``pi(rep) == mask`` (vertex
    ``i`` of the representative becomes ``pi[i]``). Representatives are the
    least mask of each class, listed in ascending order.
    """

    def __init__(self, n: int):
        if n > 7:
            raise GraphError("orbit tables are built for n <= 7")
        self.n = n
        pairs = edge_pairs(n)
        index = {p: i for i, p in enumerate(pairs)}
        self.perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
        emap = np.zeros((len(self.perms), len(pairs)), dtype=np.int64)
        for k, pi in enumerate(self.perms):
            for i, (u, v) in enumerate(pairs):
                a, b = pi[u], pi[v]
                emap[k, i] = index[(a, b) if a < b else (b, a)]
        self.edge_map = emap
        size = 1 << len(pairs)
        self.cls = np.full(size, -1, dtype=np.int32)
        self.perm = np.zeros(size, dtype=np.int32)
        reps = []
        sizes = []
        ptr = 0
        while True:
            while ptr < size and self.cls[ptr] != -1:
                ptr += 1
            if ptr == size:
                break
            images = self.image(ptr)
            uniq, first = np.unique(images, return_index=True)
            self.cls[uniq] = len(reps)
            self.perm[uniq] = first
            reps.append(ptr)
            sizes.append(len(uniq))
        self.reps = reps
        self.sizes = sizes

    def image(self, mask: int) -> np.ndarray:
        """``mask`` relabelled by every permutation."""
        out = np.zeros(len(self.perms), dtype=np.int64)
        for i in range(len(edge_pairs(self.n))):
            if mask >> i & 1:
                out |= np.int64(1) << self.edge_map[:, i]
        return out

    def __len__(self) -> int:
        return len(self.reps)

    def representatives(self) -> Iterator[tuple[Graph, int]]:
        for rep, size in zip(self.reps, self.sizes):
            yield graph_from_mask(self.n, rep), size

    def check_consistency(self) -> bool:
        """Every labelled mask equals its representative relabelled by its permutation."""
        reps = np.array(self.reps, dtype=np.int64)[self.cls]
        perms = self.perm.astype(np.int64)
        img = np.zeros_like(reps)
        for i in range(len(edge_pairs(self.n))):
            bit = (reps >> i) & 1
            img |= bit << self.edge_map[perms, i]
        return bool(np.all(img == np.arange(len(self.cls), dtype=np.int64))) and sum(self.sizes) == len(self.cls)


@lru_cache(maxsize=8)
def orbit_table(n: int) -> OrbitTable:
    return OrbitTable(n)


def lift_hamilton_cycles(table: OrbitTable, cycles: dict[int, OrientedCycle]) -> tuple[int, int]:
    """Transport each class's Hamilton cycle to every labelled member and validate it.

    Returns ``(checked, failures)`` over all labelled graphs whose class has a
    cycle in ``cycles`` (keyed by class index).
    """
    n = table.n
    index = {p: i for i, p in enumerate(edge_pairs(n))}
    edges = np.full((len(table), n), -1, dtype=np.int64)
    for k, c in cycles.items():
        if len(c) != n:
            raise GraphError("lifted cycles must be Hamiltonian")
        for j, (a, b) in enumerate(c.edges()):
            edges[k, j] = index[(a, b) if a < b else (b, a)]
    have = np.zeros(len(table), dtype=bool)
    have[list(cycles)] = True
    labelled = np.flatnonzero(have[table.cls]).astype(np.int64)
    cls = table.cls[labelled]
    perms = table.perm[labelled].astype(np.int64)
    moved = np.zeros(len(labelled), dtype=np.int64)
    for j in range(n):
        moved |= np.int64(1) << table.edge_map[perms, edges[cls, j]]
    # a relabelled Hamilton cycle has exactly n distinct edges, all present
    ok = ((moved & ~labelled) == 0) & (np.bitwise_count(moved) == n)
    return len(labelled), int(np.count_nonzero(~ok))


@dataclass(frozen=True)
class GraphSource:
    """Where graphs come from.

    ``kind`` is ``exhaustive`` (all graphs with ``n_min <= n <= n``; one per
    isomorphism class when ``reduce``), ``random`` (``count`` graphs of
    ``G(n', p')`` with ``n'`` drawn from ``[n_min, n]`` and ``p'`` from ``ps``)
    or ``file`` (a graph6 / edge-list path).
    """

    kind: str
    n: int = 0
    n_min: int | None = None
    min_connectivity: int = 0
    reduce: bool = True
    ps: tuple[float, ...] = (0.5,)
    seed: int = 0
    count: int = 0
    path: str | None = None
    allow_large: bool = False

    @classmethod
    def exhaustive(cls, n: int, n_min: int | None = None, **kw) -> "GraphSource":
        return cls("exhaustive", n=n, n_min=n_min, **kw)

    @classmethod
    def random(cls, n: int, count: int, ps: Iterable[float], seed: int, n_min: int | None = None) -> "GraphSource":
        return cls("random", n=n, n_min=n_min, ps=tuple(ps), seed=seed, count=count)

    @classmethod
    def file(cls, path: str) -> "GraphSource":
        return cls("file", path=path)

    def weighted(self) -> Iterator[tuple[Graph, int]]:
        """``(graph, weight)`` pairs; weight counts the labelled graphs represented."""
        lo = self.n if self.n_min is None else self.n_min
        if self.kind == "exhaustive":
            for n in range(lo, self.n + 1):
                if self.reduce and n <= 7:
                    for g, size in orbit_table(n).representatives():
                        if self.min_connectivity == 0 or is_k_connected(g, self.min_connectivity):
                            yield g, size
                else:
                    for g in enumerate_graphs(n, self.min_connectivity, self.allow_large):
                        yield g, 1
        elif self.kind == "random":
            rng = random.Random(self.seed)
            for _ in range(self.count):
                n = rng.randint(lo, self.n)
                p = rng.choice(self.ps)
                yield random_graph(n, p, rng.getrandbits(63)), 1
        elif self.kind == "file":
            from .cli_io import read_graphs

            for g in read_graphs(self.path):
                yield g, 1
        else:
            raise GraphError(f"unknown graph source {self.kind!r}")

    def __iter__(self) -> Iterator[Graph]:
        return (g for g, _ in self.weighted())


# ---------------------------------------------------------- counterexamples

@dataclass
class SearchReport:
    theorem: str
    scanned: int = 0
    hypothesis: int = 0
    hamiltonian: int = 0
    counterexamples: list[str] = field(default_factory=list)
    alarms: list[str] = field(default_factory=list)
    strategies: Counter = field(default_factory=Counter)
    per_n: dict[int, list[int]] = field(default_factory=dict)
    wall_time: float = 0.0

    def add(self, g: Graph, weight: int, satisfied: bool, hamiltonian: bool) -> None:
        self.scanned += weight
        row = self.per_n.setdefault(g.n, [0, 0, 0])
        row[0] += weight
        if satisfied:
            self.hypothesis += weight
            row[1] += weight
        if hamiltonian:
            self.hamiltonian += weight
            row[2] += weight

    def merge(self, other: "SearchReport") -> "SearchReport":
        if other.theorem != self.theorem:
            raise ValueError("cannot merge reports for different theorems")
        out = SearchReport(self.theorem)
        out.scanned = self.scanned + other.scanned
        out.hypothesis = self.hypothesis + other.hypothesis
        out.hamiltonian = self.hamiltonian + other.hamiltonian
        out.counterexamples = self.counterexamples + other.counterexamples
        out.alarms = self.alarms + other.alarms
        out.strategies = self.strategies + other.strategies
        for src in (self.per_n, other.per_n):
            for n, row in src.items():
                acc = out.per_n.setdefault(n, [0, 0, 0])
                for i in range(3):
                    acc[i] += row[i]
        out.wall_time = self.wall_time + other.wall_time
        return out

    @property
    def clean(self) -> bool:
        return not self.counterexamples and not self.alarms

    def lines(self, timing: bool = False) -> list[str]:
        out = [
            f"theorem: {self.theorem}",
            f"graphs: {self.scanned}",
            f"hypothesis: {self.hypothesis}",
            f"hamiltonian: {self.hamiltonian}",
            f"counterexamples: {len(self.counterexamples)}",
            f"alarms: {len(self.alarms)}",
        ]
        for name in sorted(self.strategies):
            out.append(f"strategy {name}: {self.strategies[name]}")
        for n in sorted(self.per_n):
            s, h, m = self.per_n[n]
            out.append(f"n {n}: graphs={s} hypothesis={h} hamiltonian={m}")
        out += [f"counterexample: {x}" for x in self.counterexamples]
        out += [f"alarm: {x}" for x in self.alarms]
        if timing:
            out.append(f"wall_time: {self.wall_time:.3f}")
        return out


def _search_one(theorem: str, g: Graph, weight: int, mode: str, report: SearchReport,
                cycles: dict | None = None, key=None) -> None:
    from .cli_io import encode_graph6

    if g.n < 3:
        report.add(g, weight, False, False)
        return
    cert = find_hamiltonian(g, theorem, mode=mode)
    if cert.outcome == "hypothesis_violation":
        report.add(g, weight, False, False)
        return
    report.strategies.update(dict(cert.strategies))
    if cert.is_hamiltonian:
        report.add(g, weight, True, True)
        if cycles is not None:
            cycles[key] = cert.cycle
        return
    # double check before reporting: hypothesis again, then the exact solver
    exact = hamiltonian_cycle(g)
    code = encode_graph6(g)
    if hypothesis_holds(g, theorem) and exact is None:
        report.counterexamples.append(code)
        report.add(g, weight, True, False)
    else:
        report.alarms.append(f"{code} engine failed: {' | '.join(cert.trace)}")
        report.add(g, weight, True, exact is not None)


def _search_chunk(args) -> SearchReport:
    theorem, items, mode = args
    rep = SearchReport(theorem)
    for g, w in items:
        _search_one(theorem, g, w, mode, rep)
    return rep


def search_counterexamples(
    theorem: str, source: GraphSource, mode: str = "proof_driven", jobs: int = 1
) -> SearchReport:
    """Hunt for graphs meeting ``theorem``'s hypothesis without a Hamilton cycle."""
    theorem = theorem.upper()
    if theorem not in THEOREMS:
        raise GraphError(f"unknown theorem {theorem!r}")
    start = time.perf_counter()
    if jobs > 1:
        items = list(source.weighted())
        chunks = [items[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_search_chunk, [(theorem, ch, mode) for ch in chunks]))
        report = SearchReport(theorem)
        for part in parts:
            report = report.merge(part)
    else:
        report = _search_chunk((theorem, source.weighted(), mode))
    report.wall_time = time.perf_counter() - start
    return report


@dataclass
class ExhaustiveResult:
    """Per-class verification for one ``n`` and its lift to labelled graphs."""

    n: int
    report: SearchReport
    lifted: int = 0
    lift_failures: int = 0


def verify_theorem_exhaustive(theorem: str, n: int, mode: str = "proof_driven") -> ExhaustiveResult:
    """Run ``theorem`` on every isomorphism class of ``n``-vertex graphs and lift
    the resulting Hamilton cycles to all labelled graphs."""
    table = orbit_table(n)
    report = SearchReport(theorem.upper())
    cycles: dict[int, OrientedCycle] = {}
    start = time.perf_counter()
    for k, (g, size) in enumerate(table.representatives()):
        _search_one(report.theorem, g, size, mode, report, cycles, k)
    lifted, failures = lift_hamilton_cycles(table, cycles) if cycles else (0, 0)
    report.wall_time = time.perf_counter() - start
    return ExhaustiveResult(n, report, lifted, failures)


# ------------------------------------------------------------- lemma suites

@dataclass
class LemmaReport:
    graphs: int = 0
    heavy_cycle_graphs: int = 0
    heavy_cycle_checks: int = 0
    heavy_cycle_violations: list[str] = field(default_factory=list)
    structure_instances: int = 0
    structure_guarded: int = 0
    structure_violations: list[str] = field(default_factory=list)
    clause_checks: Counter = field(default_factory=Counter)
    implication_checks: int = 0
    implication_violations: list[str] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not (self.heavy_cycle_violations or self.structure_violations or self.implication_violations)

    def lines(self) -> list[str]:
        out = [
            f"graphs: {self.graphs}",
            f"heavy-cycle graphs: {self.heavy_cycle_graphs}",
            f"heavy-cycle checks: {self.heavy_cycle_checks}",
            f"heavy-cycle violations: {len(self.heavy_cycle_violations)}",
            f"structure instances: {self.structure_instances}",
            f"structure guarded: {self.structure_guarded}",
            f"structure violations: {len(self.structure_violations)}",
        ]
        for cl in LEMMA_CLAUSES:
            out.append(f"clause {cl}: {self.clause_checks.get(cl, 0)}")
        out += [
            f"implication checks: {self.implication_checks}",
            f"implication violations: {len(self.implication_violations)}",
        ]
        out += [f"violation: {x}" for x in self.heavy_cycle_violations + self.structure_violations + self.implication_violations]
        return out


def check_implications(g: Graph) -> list[str]:
    """Failed heavy-class and hypothesis implications on ``g`` (expected: none)."""
    flags = heavy_class(g)
    bad = [f"{a}=>{b}" for a, b in FLAG_IMPLICATIONS if getattr(flags, a) and not getattr(flags, b)]
    holds = {t: hypothesis_holds(g, t) for t in THEOREMS}
    bad += [f"{a}=>{b}" for a, b in HYPOTHESIS_IMPLICATIONS if holds[a] and not holds[b]]
    return bad


def verify_lemmas(source: GraphSource | Iterable[Graph], implications: bool = True) -> LemmaReport:
    """Longest cycles contain every heavy vertex, the cycle/component clauses
    (a)-(f) hold, and the class and hypothesis implications hold.

    The clauses are checked for every longest cycle in both orientations and every
    component off the cycle, which covers whichever longest cycle a
    deterministic solver would pick under any labelling.
    """
    from .cli_io import encode_graph6

    rep = LemmaReport()
    graphs = source if not isinstance(source, GraphSource) else iter(source)
    for g in graphs:
        rep.graphs += 1
        if g.n < 3:
            continue
        code = encode_graph6(g)
        if implications:
            rep.implication_checks += 1
            rep.implication_violations += [f"{code} {x}" for x in check_implications(g)]
        two_conn = is_k_connected(g, 2)
        flags = heavy_class(g)
        cycles = longest_cycles(g)
        if two_conn and flags.k14_o_heavy:
            rep.heavy_cycle_graphs += 1
            for c in cycles:
                rep.heavy_cycle_checks += 1
                if not is_heavy_cycle(g, c):
                    rep.heavy_cycle_violations.append(f"{code} light vertex off longest cycle {list(c.seq)}")
        if not cycles or len(cycles[0]) == g.n:
            continue
        guard = two_conn and flags.o_heavy
        for c in cycles:
            for oriented in (c, c.reverse()):
                for comp in off_cycle_components(g, oriented):
                    if not neighbors_on_cycle(g, oriented, comp):
                        continue  # every clause is vacuous without attachments
                    rep.structure_instances += 1
                    rep.structure_guarded += guard
                    res = lemma3_check(Lemma3Input(g, oriented, comp), guard=guard)
                    rep.clause_checks.update(res.checked)
                    for clause, vs in res.violations:
                        rep.structure_violations.append(
                            f"{code} clause({clause}) cycle={list(oriented.seq)} vertices={list(vs)}"
                        )
    return rep


# ------------------------------------------------------------ realisation

@dataclass
class RealizationReport:
    graphs: int = 0
    o_cycles: int = 0
    grew: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.failures


def verify_realization(graphs: Iterable[Graph], per_graph: int = 10_000, seed: int = 0) -> RealizationReport:
    """Realise every o-cycle (or a seeded sample of ``per_graph`` of them) both
    by exchanges and by exhaustive search; both must succeed and cover the input."""
    from .cli_io import encode_graph6

    rep = RealizationReport()
    for g in graphs:
        if g.n < 3:
            continue
        rep.graphs += 1
        ocs = list(iter_o_cycles(g))
        if len(ocs) > per_graph:
            ocs = random.Random(seed).sample(ocs, per_graph)
        for oc in ocs:
            rep.o_cycles += 1
            want = sum(1 << v for v in oc)
            try:
                fast = realize_cycle(g, oc)
                slow = realize_cycle(g, oc, method="exhaustive")
            except Exception as exc:  # noqa: BLE001 - every failure is reported
                rep.failures.append(f"{encode_graph6(g)} {list(oc)}: {exc}")
                continue
            for got in (fast, slow):
                if not is_valid_cycle(g, got) or want & ~got.mask or len(got) < len(oc):
                    rep.failures.append(f"{encode_graph6(g)} {list(oc)} -> {list(got.seq)}")
            rep.grew += len(fast) > len(oc)
    return rep


def guarded_lemma_graphs(per_base: int = 300, seed: int = 0) -> list[Graph]:
    """2-connected o-heavy non-Hamiltonian graphs for the guarded lemma clauses.

    None exist with at most 7 vertices, so the claw-free line graphs of theta
    graphs are used together with seeded random edge additions that keep the
    graph o-heavy and non-Hamiltonian (adding edges keeps it 2-connected).
    """
    from .generators import theta_line_family

    rng = random.Random(seed)
    out: list[Graph] = []
    seen: set[Graph] = set()
    for base in theta_line_family():
        out.append(base)
        seen.add(base)
        for _ in range(per_base):
            g = base
            for _ in range(rng.randint(1, 8)):
                missing = [(u, v) for u, v in edge_pairs(g.n) if not g.has_edge(u, v)]
                h = Graph.from_edges(g.n, list(g.edges()) + [rng.choice(missing)])
                if heavy_class(h).o_heavy and hamiltonian_cycle(h) is None:
                    g = h
            if g not in seen:
                seen.add(g)
                out.append(g)
    return out


def sharpness_candidates(source: GraphSource | Iterable[Graph]) -> list[Graph]:
    """2-connected 1-heavy non-Hamiltonian graphs where every distance-two pair
    meets the degree or the common-neighbour pair condition (graphs showing 2-heavy cannot be
    weakened to 1-heavy)."""
    from .graph_core import distance_two_pairs
    from .patterns import fan_or_shi

    out = []
    for g in source:
        if g.n < 3 or not heavy_class(g).one_heavy or not is_k_connected(g, 2):
            continue
        if all(fan_or_shi(g, u, v) for u, v in distance_two_pairs(g)) and hamiltonian_cycle(g) is None:
            out.append(g)
    return out


def labelled_count(n: int) -> int:
    return 1 << math.comb(n, 2)
