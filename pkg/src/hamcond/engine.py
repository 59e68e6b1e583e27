"""Longest cycles, fans, longest-cycle structure checks and proof-driven cycle extension.

The extension strategies turn the contradiction arguments for the Z2 and Z1
results into constructions: every step where the argument says "this pair is
not an Ore edge, since C is longest" is checked, and when the pair *is* an
Ore edge the corresponding longer o-cycle is assembled and realised. All
assembled o-cycles are validated before use, so a strategy can fail (and
report :class:`Stuck`) but never return a wrong cycle.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .graph_core import (
    Graph,
    GraphError,
    OrientedCycle,
    components,
    is_valid_cycle,
    iter_bits,
    iter_cycles,
    mask_of,
)
from .ore import in_ore, is_o_cycle, ore_adjacency, realize_cycle
from .patterns import (
    HypothesisReport,
    InducedCopy,
    Pattern,
    check_hypothesis,
    heavy_class,
    is_heavy,
)

EXACT_CAP = 20
STRATEGIES = ("s0", "s1", "s2", "s3")

StopSignal = Callable[[], bool]


class SearchCancelled(RuntimeError):
    """The caller's stop signal fired during a long search."""


def _checkpoint(stop: StopSignal | None) -> None:
    if stop is not None and stop():
        raise SearchCancelled("search cancelled by caller")


# ------------------------------------------------------------ exact search

def longest_cycle(
    g: Graph, cap: int = EXACT_CAP, stop: StopSignal | None = None
) -> OrientedCycle | None:
    """A maximum-length cycle, or ``None`` for a forest.

    Depth-first search over canonical cycle sequences in lexicographic order,
    recording only strict improvements, so the result is the lexicographically
    least maximum cycle. Branches that cannot beat the incumbent (counting the
    vertices still reachable) are pruned.
    """
    if g.n > cap:
        raise GraphError(f"exact longest-cycle search capped at n={cap}; use proof-driven mode")
    adj = g.adj
    best: list[int] = []
    path: list[int] = []

    def bound(v: int, free: int) -> int:
        seen = 0
        frontier = adj[v] & free
        while frontier:
            seen |= frontier
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= adj[w]
            frontier = nxt & free & ~seen
        return seen.bit_count()

    def walk(s: int, v: int, free: int) -> bool:
        nonlocal best
        _checkpoint(stop)
        if len(path) + bound(v, free) <= len(best):
            return False
        for w in iter_bits(adj[v] & free):
            path.append(w)
            if len(path) >= 3 and adj[w] >> s & 1 and path[1] < w and len(path) > len(best):
                best = path[:]
                if len(best) == g.n:
                    return True
            if walk(s, w, free & ~(1 << w)):
                return True
            path.pop()
        return False

    for s in range(g.n):
        if g.n - s <= len(best):
            break
        path[:] = [s]
        if walk(s, s, g.all_mask & ~((1 << (s + 1)) - 1)):
            break
    return OrientedCycle(best) if best else None


def circumference(g: Graph, stop: StopSignal | None = None) -> int:
    c = longest_cycle(g, cap=max(EXACT_CAP, g.n), stop=stop)
    return len(c) if c else 0


def longest_cycles(g: Graph) -> list[OrientedCycle]:
    """Every maximum-length cycle (one canonical sequence each). Desk scale."""
    best = 0
    out: list[tuple[int, ...]] = []
    for cyc in iter_cycles(g):
        if len(cyc) > best:
            best, out = len(cyc), [cyc]
        elif len(cyc) == best:
            out.append(cyc)
    return [OrientedCycle(c) for c in out]


def hamiltonian_cycle(g: Graph, stop: StopSignal | None = None) -> OrientedCycle | None:
    if g.n < 3:
        return None
    c = longest_cycle(g, cap=max(EXACT_CAP, g.n), stop=stop)
    return c if c is not None and len(c) == g.n else None


def shortest_cycle(g: Graph) -> OrientedCycle | None:
    """A girth cycle: for each edge ``uv`` the shortest ``v``-``u`` path avoiding it."""
    best: list[int] | None = None
    for u, v in g.edges():
        parent = {v: -1}
        queue = deque([v])
        while queue and u not in parent:
            x = queue.popleft()
            for w in iter_bits(g.adj[x]):
                if w not in parent and not (x == v and w == u):
                    parent[w] = x
                    queue.append(w)
        if u not in parent:
            continue
        cyc = [u]
        while parent[cyc[-1]] != -1:
            cyc.append(parent[cyc[-1]])
        if best is None or len(cyc) < len(best):
            best = cyc
    return OrientedCycle(best) if best else None


def is_heavy_cycle(g: Graph, c: OrientedCycle) -> bool:
    return all(v in c for v in range(g.n) if is_heavy(g, v))


# ------------------------------------------------------------------ fans

@dataclass(frozen=True)
class Fan:
    """``k`` paths from ``center`` to the cycle, pairwise sharing only ``center``.

    ``paths[i]`` runs from the centre to ``endpoints[i]``; endpoints are listed
    along the cycle orientation and ``preds[i]`` is the vertex just before
    ``endpoints[i]`` on its path.
    """

    center: int
    paths: tuple[tuple[int, ...], ...]

    @property
    def endpoints(self) -> tuple[int, ...]:
        return tuple(p[-1] for p in self.paths)

    @property
    def preds(self) -> tuple[int, ...]:
        return tuple(p[-2] for p in self.paths)

    @property
    def size(self) -> int:
        return 1 + sum(len(p) - 1 for p in self.paths)

    def is_valid(self, g: Graph, c: OrientedCycle) -> bool:
        if len(self.paths) < 2 or self.center in c:
            return False
        seen = {self.center}
        for p in self.paths:
            if p[0] != self.center or p[-1] not in c:
                return False
            if any(x in c for x in p[1:-1]):
                return False
            if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
                return False
            if seen & set(p[1:]):
                return False
            seen |= set(p[1:])
        order = [c.index(v) for v in self.endpoints]
        return order == sorted(order)


def find_fan(g: Graph, c: OrientedCycle, u: int, k: int) -> Fan | None:
    """A ``(u, C)``-fan with ``k`` paths and the fewest vertices, or ``None``.

    Min-cost flow with unit vertex capacities: every off-cycle vertex other than
    ``u`` may be used once, every cycle vertex may end one path, and each vertex
    used costs one.
    """
    if u in c:
        raise GraphError(f"fan centre {u} lies on the cycle")
    if k < 2:
        raise GraphError("a fan needs at least two paths")
    n = g.n
    # node ids: v_in = 2v, v_out = 2v + 1, sink = 2n
    sink = 2 * n
    graph: dict[int, list[list[int]]] = {i: [] for i in range(2 * n + 1)}

    def arc(a: int, b: int, cap: int, cost: int) -> None:
        fwd = [b, cap, cost, len(graph[b]), 1]
        back = [a, 0, -cost, len(graph[a]), 0]
        graph[a].append(fwd)
        graph[b].append(back)

    for v in range(n):
        if v == u:
            continue
        if v in c:
            arc(2 * v, sink, 1, 1)
        else:
            arc(2 * v, 2 * v + 1, 1, 1)
    for a, b in g.edges():
        for x, y in ((a, b), (b, a)):
            if x in c or y == u:
                continue
            arc(2 * x + 1, 2 * y, 1, 0)
    src = 2 * u + 1
    flow = 0
    while flow < k:
        # Bellman-Ford shortest augmenting path; graphs are tiny
        dist = {src: 0}
        prev: dict[int, tuple[int, int]] = {}
        changed = True
        while changed:
            changed = False
            for a in sorted(dist):
                for idx, (b, cap, cost, _, _) in enumerate(graph[a]):
                    if cap > 0 and dist[a] + cost < dist.get(b, 1 << 30):
                        dist[b] = dist[a] + cost
                        prev[b] = (a, idx)
                        changed = True
        if sink not in dist:
            return None
        b = sink
        while b != src:
            a, idx = prev[b]
            e = graph[a][idx]
            e[1] -= 1
            graph[b][e[3]][1] += 1
            b = a
        flow += 1
    # decompose along forward arcs whose reverse arc holds flow
    carried: dict[int, list[int]] = {}
    for a, arcs in graph.items():
        for b, cap, cost, rev, forward in arcs:
            if forward and graph[b][rev][1] > 0:
                carried.setdefault(a, []).append(b)
    paths = []
    for b in sorted(carried.get(src, [])):
        p = [u]
        node = b
        while True:
            v = node // 2
            p.append(v)
            if v in c:
                break
            node = carried[2 * v + 1][0]
        paths.append(tuple(p))
    paths.sort(key=lambda p: c.index(p[-1]))
    return Fan(u, tuple(paths))


def minimum_fan(g: Graph, c: OrientedCycle, comp: int, k: int) -> Fan | None:
    """Smallest ``k``-fan over all centres in ``comp`` (ties: smallest centre)."""
    best = None
    for u in iter_bits(comp):
        f = find_fan(g, c, u, k)
        if f is not None and (best is None or f.size < best.size):
            best = f
    return best


# ------------------------------------------- cycle/component structure

def neighbors_on_cycle(g: Graph, c: OrientedCycle, comp: int) -> list[int]:
    """``A``: cycle vertices adjacent to ``comp``, in orientation order."""
    return [v for v in c.seq if g.adj[v] & comp]


def off_cycle_components(g: Graph, c: OrientedCycle) -> list[int]:
    return components(g, g.all_mask & ~c.mask)


def _bfs_path(g: Graph, starts: Iterable[int], inside: int, goal: Callable[[int], bool]) -> list[int] | None:
    """Shortest path from one of ``starts`` (inside ``inside``) to a vertex satisfying ``goal``."""
    parent: dict[int, int] = {}
    queue = deque()
    for s in starts:
        if s not in parent:
            parent[s] = -1
            queue.append(s)
    while queue:
        v = queue.popleft()
        if goal(v):
            out = [v]
            while parent[out[-1]] != -1:
                out.append(parent[out[-1]])
            return out[::-1]
        for w in iter_bits(g.adj[v] & inside):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return None


def path_through(g: Graph, a: int, b: int, comp: int) -> list[int] | None:
    """Shortest ``a``-``b`` path with at least one internal vertex, all internal in ``comp``."""
    inner = _bfs_path(g, iter_bits(g.adj[a] & comp), comp, lambda v: g.has_edge(v, b))
    return None if inner is None else [a] + inner + [b]


def path_into(g: Graph, a: int, u: int, comp: int) -> list[int] | None:
    """Shortest path ``a, ..., u`` whose vertices after ``a`` lie in ``comp``."""
    inner = _bfs_path(g, [u], comp, lambda v: g.has_edge(v, a))
    return None if inner is None else [a] + inner[::-1]


def shortest_bridge(g: Graph, c: OrientedCycle, comp: int) -> list[int] | None:
    """Shortest path between distinct cycle vertices through ``comp`` (ties lexicographic)."""
    best = None
    attach = neighbors_on_cycle(g, c, comp)
    for a in sorted(attach):
        for b in sorted(attach):
            if b == a:
                continue
            p = path_through(g, a, b, comp)
            if p is not None and (best is None or len(p) < len(best)):
                best = p
    return best


@dataclass(frozen=True)
class Lemma3Input:
    g: Graph
    cycle: OrientedCycle
    component: int
    path: tuple[int, ...] | None = None

    def validate(self) -> list[int]:
        """Check the structural invariants and return ``A``."""
        g, c, comp = self.g, self.cycle, self.component
        if not is_valid_cycle(g, c):
            raise GraphError("cycle/component input: not a cycle of the graph")
        if comp == 0 or comp & c.mask or comp not in off_cycle_components(g, c):
            raise GraphError("cycle/component input: not a component of G - V(C)")
        attach = neighbors_on_cycle(g, c, comp)
        if not attach:
            raise GraphError("cycle/component input: component has no neighbour on the cycle")
        if self.path is not None:
            p = self.path
            if len(p) < 3 or p[0] not in attach or p[-1] not in attach or p[0] == p[-1]:
                raise GraphError("cycle/component input: path must join two attachment vertices")
            if any(not comp >> x & 1 for x in p[1:-1]):
                raise GraphError("cycle/component input: path interior must lie in the component")
            if any(not g.has_edge(x, y) for x, y in zip(p, p[1:])):
                raise GraphError("cycle/component input: path uses a non-edge")
        return attach


@dataclass
class Lemma3Report:
    checked: set[str] = field(default_factory=set)
    violations: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _window(g: Graph, c: OrientedCycle, v: int, other: int) -> list[int] | None:
    """``C[v+, y]`` where ``y`` is the first vertex after ``v`` (up to ``other``) not adjacent to ``v``."""
    seg = c.segment(v, other)[1:]
    for i, x in enumerate(seg):
        if not g.has_edge(v, x):
            return seg[: i + 1]
    return None


def lemma3_check(inp: Lemma3Input, guard: bool | None = None) -> Lemma3Report:
    """Evaluate clauses (a)-(f) for one cycle/component pair.

    (d)-(f) are only evaluated when ``G`` is 2-connected and o-heavy (``guard``
    may be passed in to skip recomputing that). Clause (f) is checked for every
    ordered pair of attachment vertices and every vertex of the component; with
    an explicit ``path`` only the path's endpoints and interior are used.
    """
    from .graph_core import is_k_connected

    attach = inp.validate()
    g, c, comp = inp.g, inp.cycle, inp.component
    rep = Lemma3Report()
    succ = {v: c.successor(v) for v in c.seq}
    pred = {v: c.predecessor(v) for v in c.seq}
    R = list(iter_bits(comp))

    def bad(clause: str, *vs: int) -> None:
        rep.violations.append((clause, vs))

    rep.checked |= {"a", "b", "c"}
    for u in R:
        for v in attach:
            if in_ore(g, u, pred[v]) or in_ore(g, u, succ[v]):
                bad("a", u, v)
    for i, vi in enumerate(attach):
        for vj in attach[i + 1 :]:
            if in_ore(g, pred[vi], pred[vj]) or in_ore(g, succ[vi], succ[vj]):
                bad("b", vi, vj)
    for vi in attach:
        if not in_ore(g, pred[vi], succ[vi]):
            continue
        for vj in attach:
            if vj != vi and (in_ore(g, vi, pred[vj]) or in_ore(g, vi, succ[vj])):
                bad("c", vi, vj)

    if guard is None:
        guard = g.n >= 3 and is_k_connected(g, 2) and heavy_class(g).o_heavy
    if not guard:
        return rep
    rep.checked |= {"d", "e", "f"}
    for v in attach:
        if not in_ore(g, pred[v], succ[v]):
            bad("d", v)
    for i, vi in enumerate(attach):
        for vj in attach[i + 1 :]:
            if not g.has_edge(pred[vi], succ[vi]) and not g.has_edge(pred[vj], succ[vj]):
                bad("e", vi, vj)
    if inp.path is not None:
        pairs = [(inp.path[0], inp.path[-1], list(inp.path[1:-1]))]
    else:
        pairs = [(a, b, R) for a in attach for b in attach if a != b]
    for v1, v2, inner in pairs:
        win1 = _window(g, c, v1, v2)
        win2 = _window(g, c, v2, v1)
        if win1 is None or win2 is None:
            bad("f", v1, v2)
            continue
        for w1 in win1:
            if in_ore(g, v2, w1) or any(in_ore(g, u, w1) for u in inner):
                bad("f", v1, v2, w1)
            for w2 in win2:
                if in_ore(g, w1, w2):
                    bad("f", v1, v2, w1, w2)
        for w2 in win2:
            if in_ore(g, v1, w2) or any(in_ore(g, u, w2) for u in inner):
                bad("f", v1, v2, w2)
    return rep


# ------------------------------------------------------------ extension

@dataclass(frozen=True)
class Extension:
    cycle: OrientedCycle
    strategy: str
    o_cycle: tuple[int, ...]


@dataclass(frozen=True)
class Stuck:
    tried: tuple[str, ...]


class _Builder:
    """O-cycle constructions around one cycle orientation and one component."""

    def __init__(self, g: Graph, c: OrientedCycle, comp: int):
        self.g, self.c, self.comp = g, c, comp
        self.nxt = {v: c.successor(v) for v in c.seq}
        self.prv = {v: c.predecessor(v) for v in c.seq}

    def ore(self, x: int, y: int) -> bool:
        return in_ore(self.g, x, y)

    def seg(self, a: int, b: int) -> list[int]:
        return self.c.segment(a, b)

    # Each construction returns a candidate o-cycle or None; callers validate.
    def via_a(self, u: int, v: int) -> list[int] | None:
        """``u`` in the component, ``v`` attached, ``u v+`` an Ore edge."""
        if not self.ore(u, self.nxt[v]):
            return None
        q = path_into(self.g, v, u, self.comp)
        return None if q is None else q + self.seg(self.nxt[v], self.prv[v])

    def via_b(self, vi: int, vj: int) -> list[int] | None:
        """``vi+ vj+`` an Ore edge."""
        if vi == vj or not self.ore(self.nxt[vi], self.nxt[vj]):
            return None
        p = path_through(self.g, vi, vj, self.comp)
        if p is None:
            return None
        return p[:-1] + self.seg(self.nxt[vi], vj)[::-1] + self.seg(self.nxt[vj], self.prv[vi])

    def via_c(self, vi: int, vj: int) -> list[int] | None:
        """``vi- vi+`` and ``vi vj+`` Ore edges."""
        if vi == vj or not (self.ore(self.prv[vi], self.nxt[vi]) and self.ore(vi, self.nxt[vj])):
            return None
        p = path_through(self.g, vj, vi, self.comp)
        if p is None:
            return None
        return self.seg(self.nxt[vi], vj) + p[1:] + self.seg(self.nxt[vj], self.prv[vi])

    def via_f1(self, v: int, u: int, w: int) -> list[int] | None:
        """``u w`` Ore edge, ``w`` past ``v+`` in ``v``'s window, ``v- v+`` Ore edge."""
        if w == self.nxt[v] or not self.ore(u, w):
            return None
        q = path_into(self.g, v, u, self.comp)
        if q is None:
            return None
        return q + self.seg(w, self.prv[v]) + self.seg(self.nxt[v], self.prv[w])

    def via_f2(self, v1: int, v2: int, w2: int) -> list[int] | None:
        """``v1 w2`` Ore edge with ``w2`` past ``v2+`` in ``v2``'s window."""
        if w2 == self.nxt[v2] or not self.ore(v1, w2):
            return None
        p = path_through(self.g, v2, v1, self.comp)
        if p is None:
            return None
        return (
            [v1]
            + self.seg(w2, self.prv[v1])
            + self.seg(self.nxt[v1], self.prv[v2])
            + self.seg(self.nxt[v2], self.prv[w2])
            + p[:-1]
        )

    def via_f3(self, v1: int, v2: int, w1: int, w2: int) -> list[int] | None:
        """``w1 w2`` Ore edge, ``wi`` in ``vi``'s window."""
        if not self.ore(w1, w2):
            return None
        p = path_through(self.g, v1, v2, self.comp)
        if p is None:
            return None
        a2 = self.seg(self.nxt[v2], self.prv[w2]) if w2 != self.nxt[v2] else []
        a1 = self.seg(self.nxt[v1], self.prv[w1]) if w1 != self.nxt[v1] else []
        return p + a2[::-1] + self.seg(w1, self.prv[v2])[::-1] + self.seg(w2, self.prv[v1]) + a1


def _accept(g: Graph, c: OrientedCycle, seq: Sequence[int] | None, strategy: str) -> Extension | None:
    if seq is None or len(seq) <= len(c) or not is_o_cycle(g, seq):
        return None
    if c.mask & ~mask_of(seq):
        return None
    real = realize_cycle(g, seq)
    return Extension(real, strategy, tuple(seq))


def structure_repair(g: Graph, c: OrientedCycle, comp: int) -> Extension | None:
    """A longer cycle built from any violated constructive structure clause.

    Tries (a), (b), (c) and (f) in both orientations; ``None`` when none of
    them is violated in a way the constructions can exploit.
    """
    for cyc in (c, c.reverse()):
        b = _Builder(g, cyc, comp)
        attach = neighbors_on_cycle(g, cyc, comp)
        for u in iter_bits(comp):
            for v in attach:
                ext = _accept(g, c, b.via_a(u, v), "repair")
                if ext:
                    return ext
        for vi in attach:
            for vj in attach:
                ext = _accept(g, c, b.via_b(vi, vj), "repair") or _accept(g, c, b.via_c(vi, vj), "repair")
                if ext:
                    return ext
        for v1 in attach:
            for v2 in attach:
                if v1 == v2:
                    continue
                win1, win2 = _window(g, cyc, v1, v2), _window(g, cyc, v2, v1)
                if not win1 or not win2:
                    continue
                for w1 in win1:
                    for u in iter_bits(comp):
                        ext = _accept(g, c, b.via_f1(v1, u, w1), "repair")
                        if ext:
                            return ext
                    for w2 in win2:
                        ext = _accept(g, c, b.via_f3(v1, v2, w1, w2), "repair")
                        if ext:
                            return ext
                for w2 in win2:
                    ext = _accept(g, c, b.via_f2(v1, v2, w2), "repair")
                    if ext:
                        return ext
    return None


def _light(g: Graph, v: int) -> bool:
    return not is_heavy(g, v)


def _z2(a1: int, a2: int, a3: int, b1: int, c1: int) -> InducedCopy:
    a2, a3 = min(a2, a3), max(a2, a3)
    return InducedCopy(Pattern.Z2, (("a1", a1), ("a2", a2), ("a3", a3), ("b1", b1), ("c1", c1)))


def _s0(g: Graph, c: OrientedCycle) -> Extension | None:
    """Insert an off-cycle vertex between two consecutive cycle vertices."""
    for x in iter_bits(g.all_mask & ~c.mask):
        for a, b in c.edges():
            if g.has_edge(x, a) and g.has_edge(x, b):
                i = c.index(a)
                seq = c.seq[: i + 1] + (x,) + c.seq[i + 1 :]
                return Extension(OrientedCycle(seq), "s0", seq)
    return None


def _s1_case1(g, c, comp, p, bld: _Builder) -> Extension | None:
    v1, u1, u2, v2 = p[0], p[1], p[2], p[-1]
    nxt, prv = bld.nxt, bld.prv
    rev = _Builder(g, c.reverse(), comp)
    ext = _accept(g, c, bld.via_b(v1, v2), "s1")
    if ext:
        return ext
    # branch: v1-, v1+ light pair with v1- light (the other branches are
    # reached by swapping orientation or the ends of the bridge)
    if g.deg[prv[v1]] + g.deg[nxt[v1]] >= g.n or not _light(g, prv[v1]):
        return None
    inner = [x for x in (u1, u2) if comp >> x & 1]
    for x in inner:
        ext = _accept(g, c, bld.via_a(x, v1), "s1") or _accept(g, c, rev.via_a(x, v1), "s1")
        if ext:
            return ext
    if not g.has_edge(prv[v1], nxt[v1]):
        return None
    cand = g.adj[prv[v1]] & g.adj[u1] & ~(1 << v1)
    for z in iter_bits(cand):
        if comp >> z & 1:
            # v1- would be attached to the component through z
            ext = _accept(g, c, rev.via_a(z, v1), "s1")
        elif z in c:
            ext = (
                _accept(g, c, bld.via_a(u1, z), "s1")
                or _accept(g, c, rev.via_a(u1, z), "s1")
                or _accept(g, c, rev.via_c(z, v1), "s1")
            )
        else:
            ext = None
        if ext:
            return ext
    return None


def _s1_case2(g, c, comp, p, bld: _Builder) -> Extension | None:
    v1, u1, v2 = p
    nxt, prv = bld.nxt, bld.prv
    rev = _Builder(g, c.reverse(), comp)
    ext = _accept(g, c, rev.via_c(v1, v2), "s1") or _accept(g, c, rev.via_c(v2, v1), "s1")
    if ext:
        return ext
    win1, win2 = _window(g, c, v1, v2), _window(g, c, v2, v1)
    if not win1 or not win2:
        return None
    y1, y2 = win1[-1], win2[-1]
    y1m, y2m = prv[y1], prv[y2]
    ext = _accept(g, c, bld.via_f3(v1, v2, y1m, y2m), "s1")
    if ext:
        return ext
    if not _light(g, y1m):
        return None
    for w in (y1m, y1):
        ext = (
            _accept(g, c, bld.via_f1(v1, u1, w), "s1")
            or _accept(g, c, bld.via_a(u1, v1) if w == nxt[v1] else None, "s1")
            or _accept(g, c, bld.via_f2(v2, v1, w), "s1")
            or _accept(g, c, bld.via_c(v2, v1) if w == nxt[v1] else None, "s1")
        )
        if ext:
            return ext
    if not _z2(v1, u1, v2, y1m, y1).is_valid(g):
        return None
    cand = g.adj[u1] & g.adj[y1m] & ~(1 << v1)
    window = mask_of(win1)
    for z in iter_bits(cand):
        if comp >> z & 1:
            ext = _accept(g, c, bld.via_f1(v1, z, y1m), "s1") or _accept(
                g, c, bld.via_a(z, v1) if y1m == nxt[v1] else None, "s1"
            )
            if ext:
                return ext
            continue
        if window >> z & 1:
            ext = _accept(g, c, bld.via_f1(v1, u1, z), "s1") or _accept(
                g, c, bld.via_a(u1, v1) if z == nxt[v1] else None, "s1"
            )
            if ext:
                return ext
            continue
        if z not in c:
            continue
        ext = _accept(g, c, bld.via_a(u1, z), "s1") or _accept(g, c, rev.via_a(u1, z), "s1")
        if ext:
            return ext
        zm, zp = prv[z], nxt[z]
        if not in_ore(g, zm, zp):
            continue
        if y1m == nxt[v1]:
            seq = bld.seg(nxt[v1], zm) + bld.seg(zp, v1) + [u1, z]
        else:
            seq = bld.seg(y1m, zm) + bld.seg(zp, prv[v1]) + bld.seg(nxt[v1], prv[y1m]) + [v1, u1, z]
        ext = _accept(g, c, seq, "s1")
        if ext:
            return ext
    return None


def _s1(g: Graph, c: OrientedCycle) -> Extension | None:
    """Induced-Z2 argument over a shortest bridge through a component (long or short bridge)."""
    for comp in off_cycle_components(g, c):
        p = shortest_bridge(g, c, comp)
        if p is None:
            continue
        for cyc in (c, c.reverse()):
            bld = _Builder(g, cyc, comp)
            for path in (p, p[::-1]):
                if len(path) == 3 and g.has_edge(path[0], path[-1]):
                    ext = _s1_case2(g, cyc, comp, path, bld)
                else:
                    ext = _s1_case1(g, cyc, comp, path, bld)
                if ext:
                    return Extension(ext.cycle, "s1", ext.o_cycle)
    return None


def _s2(g: Graph, c: OrientedCycle) -> Extension | None:
    """Follow the Z1 argument: minimum 3-fan, light end, common neighbours z1, z2."""
    for comp in off_cycle_components(g, c):
        fan = minimum_fan(g, c, comp, 3)
        if fan is None:
            continue
        for cyc in (c, c.reverse()):
            bld = _Builder(g, cyc, comp)
            rev = _Builder(g, cyc.reverse(), comp)
            nxt, prv = bld.nxt, bld.prv
            ends = fan.endpoints
            for i, vi in enumerate(ends):
                for vj in ends[i + 1 :]:
                    ext = _accept(g, c, bld.via_b(vi, vj), "s2") or _accept(g, c, rev.via_b(vi, vj), "s2")
                    if ext:
                        return ext
            for v1, u1 in zip(fan.endpoints, fan.preds):
                vm, vp = prv[v1], nxt[v1]
                if not (_light(g, vm) and _light(g, vp)):
                    continue
                ext = _accept(g, c, bld.via_a(u1, v1), "s2") or _accept(g, c, rev.via_a(u1, v1), "s2")
                if ext:
                    return ext
                if not g.has_edge(vm, vp):
                    continue
                zs1 = g.adj[u1] & g.adj[vm] & ~(1 << v1)
                zs2 = g.adj[u1] & g.adj[vp] & ~(1 << v1)
                for z in iter_bits((zs1 | zs2) & comp):
                    ext = _accept(g, c, rev.via_a(z, v1), "s2") or _accept(g, c, bld.via_a(z, v1), "s2")
                    if ext:
                        return ext
                for z1 in iter_bits(zs1 & c.mask):
                    for z2 in iter_bits(zs2 & c.mask):
                        if z1 == z2:
                            ext = _accept(g, c, rev.via_c(z1, v1), "s2")
                            if ext:
                                return ext
                            continue
                        a, b = prv[z1], nxt[z2]
                        if not in_ore(g, a, b):
                            continue
                        pos = {v: k for k, v in enumerate(bld.seg(v1, prv[v1]))}
                        if pos[z1] < pos[z2]:
                            seq = [u1] + bld.seg(z1, z2) + bld.seg(vp, a) + bld.seg(b, v1)
                            ext = _accept(g, c, seq, "s2")
                            if ext:
                                return ext
    return None


def _s3(g: Graph, c: OrientedCycle, budget: int = 20000) -> Extension | None:
    """Bounded search for an o-cycle on ``V(C)`` plus one new vertex."""
    oadj = ore_adjacency(g)
    for x in iter_bits(g.all_mask & ~c.mask):
        # cheap pass: squeeze x between consecutive vertices using Ore edges
        for a, b in c.edges():
            if oadj[x] >> a & 1 and oadj[x] >> b & 1:
                i = c.index(a)
                seq = c.seq[: i + 1] + (x,) + c.seq[i + 1 :]
                ext = _accept(g, c, seq, "s3")
                if ext:
                    return ext
        target = c.mask | 1 << x
        size = target.bit_count()
        left = [budget]
        path = [x]

        def walk(v: int, used: int) -> list[int] | None:
            left[0] -= 1
            if left[0] < 0:
                return None
            if len(path) == size:
                return path[:] if oadj[v] >> x & 1 else None
            for w in iter_bits(oadj[v] & target & ~used):
                path.append(w)
                found = walk(w, used | 1 << w)
                path.pop()
                if found:
                    return found
            return None

        found = walk(x, 1 << x)
        if found:
            ext = _accept(g, c, found, "s3")
            if ext:
                return ext
    return None


_STRATEGY_FUNCS = {"s0": _s0, "s1": _s1, "s2": _s2, "s3": _s3}


def extend_cycle(
    g: Graph, c: OrientedCycle, strategies: Sequence[str] = STRATEGIES
) -> Extension | Stuck:
    """A strictly longer cycle through ``V(C)``, or :class:`Stuck`.

    Strategies run in the given order: ``s0`` direct insertion, ``s1`` the Z2
    argument over a shortest bridge, ``s2`` the Z1 fan argument, ``s3`` bounded
    o-cycle search with one extra vertex.
    """
    if not is_valid_cycle(g, c):
        raise GraphError("extend_cycle needs a cycle of the graph")
    if len(c) == g.n:
        raise GraphError("cycle is already Hamiltonian")
    for s in strategies:
        if s not in _STRATEGY_FUNCS:
            raise GraphError(f"unknown strategy {s!r}")
        ext = _STRATEGY_FUNCS[s](g, c)
        if ext is not None:
            if not (is_valid_cycle(g, ext.cycle) and len(ext.cycle) > len(c) and not c.mask & ~ext.cycle.mask):
                raise AssertionError(f"strategy {s} produced an invalid extension")
            return ext
    return Stuck(tuple(strategies))


# ---------------------------------------------------------- certificates

@dataclass(frozen=True)
class Certificate:
    """Outcome of a Hamiltonicity search.

    ``outcome`` is ``hamilton_cycle``, ``hypothesis_violation``,
    ``not_hamiltonian`` or ``counterexample_alarm``.
    """

    outcome: str
    cycle: OrientedCycle | None = None
    report: HypothesisReport | None = None
    trace: tuple[str, ...] = ()
    strategies: tuple[tuple[str, int], ...] = ()

    @property
    def is_hamiltonian(self) -> bool:
        return self.outcome == "hamilton_cycle"


def find_hamiltonian(
    g: Graph,
    theorem: str | None = "T10",
    mode: str = "proof_driven",
    stop: StopSignal | None = None,
    cap: int = EXACT_CAP,
) -> Certificate:
    """Hamilton cycle of ``g`` under the named theorem's hypothesis.

    With ``theorem=None`` no hypothesis is checked and a non-Hamiltonian graph
    yields ``not_hamiltonian`` (by exhaustion) instead of an alarm.
    """
    if g.n < 3:
        raise GraphError(f"need n >= 3, got n={g.n}")
    if mode not in ("proof_driven", "exact"):
        raise GraphError(f"unknown mode {mode!r}")
    report = None
    if theorem is not None:
        report = check_hypothesis(g, theorem)
        if not report.satisfied:
            return Certificate("hypothesis_violation", report=report)

    def failure(c: OrientedCycle | None, trace: list[str], used: Counter) -> Certificate:
        kind = "not_hamiltonian" if theorem is None else "counterexample_alarm"
        return Certificate(kind, c, report, tuple(trace), tuple(sorted(used.items())))

    used: Counter = Counter()
    trace: list[str] = []
    if mode == "exact":
        c = longest_cycle(g, cap=cap, stop=stop)
        used["exact"] += 1
    else:
        c = shortest_cycle(g)
        exact_done = False
        while c is not None and len(c) < g.n:
            _checkpoint(stop)
            ext = extend_cycle(g, c)
            if isinstance(ext, Extension):
                used[ext.strategy] += 1
                c = ext.cycle
                continue
            trace.append(f"stuck at {list(c.seq)}")
            if exact_done:
                trace.append("extension of a longest cycle succeeded or stalled; giving up")
                break
            c = longest_cycle(g, cap=max(cap, g.n), stop=stop)
            used["exact"] += 1
            exact_done = True
            if c is not None and len(c) < g.n:
                trace.append(f"longest cycle {list(c.seq)} is not spanning")
                break
    if c is None or len(c) < g.n:
        if c is None:
            trace.append("graph is acyclic")
        return failure(c, trace, used)
    if not is_valid_cycle(g, c):
        raise AssertionError("produced cycle does not validate")
    return Certificate("hamilton_cycle", c, report, tuple(trace), tuple(sorted(used.items())))
