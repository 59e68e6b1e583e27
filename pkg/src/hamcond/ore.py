"""Ore pseudo-edges, o-cycles and their realisation as genuine cycles.

A pair ``{x, y}`` is an Ore edge when ``xy`` is an edge or
``d(x) + d(y) >= n``; it is *pseudo* when only the degree sum qualifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .graph_core import Graph, GraphError, OrientedCycle, iter_bits, iter_cycles, mask_of


class RealizationError(RuntimeError):
    """An o-cycle could not be turned into a real cycle.

    Every o-cycle has a real cycle through a superset of its vertices, so this
    is an alarm (a bug or a refutation), never an expected outcome.
    """


@dataclass(frozen=True)
class OreEdgeSet:
    real: frozenset[tuple[int, int]]
    pseudo: frozenset[tuple[int, int]]

    def __contains__(self, pair) -> bool:
        u, v = pair
        key = (min(u, v), max(u, v))
        return key in self.real or key in self.pseudo

    def tag(self, u: int, v: int) -> str | None:
        key = (min(u, v), max(u, v))
        if key in self.real:
            return "real"
        if key in self.pseudo:
            return "pseudo"
        return None

    def __len__(self) -> int:
        return len(self.real) + len(self.pseudo)


def ore_edges(g: Graph) -> OreEdgeSet:
    if g.n < 3:
        raise GraphError(f"need n >= 3, got n={g.n}")
    real = frozenset(g.edges())
    pseudo = frozenset(
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v) and g.deg[u] + g.deg[v] >= g.n
    )
    return OreEdgeSet(real, pseudo)


@lru_cache(maxsize=4096)
def ore_adjacency(g: Graph) -> tuple[int, ...]:
    """Per-vertex bitsets of Ore neighbours (real and pseudo)."""
    out = []
    for u in range(g.n):
        a = g.adj[u]
        for v in range(g.n):
            if v != u and g.deg[u] + g.deg[v] >= g.n:
                a |= 1 << v
        out.append(a)
    return tuple(out)


def ore_closure_graph(g: Graph) -> Graph:
    """The graph on ``V(G)`` whose edge set is the Ore edge set."""
    return Graph(g.n, ore_adjacency(g))


def in_ore(g: Graph, u: int, v: int) -> bool:
    return u != v and (g.has_edge(u, v) or g.deg[u] + g.deg[v] >= g.n)


def is_o_cycle(g: Graph, seq: Sequence[int]) -> bool:
    seq = tuple(seq)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    return all(in_ore(g, seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def pseudo_positions(g: Graph, seq: Sequence[int]) -> list[int]:
    k = len(seq)
    return [i for i in range(k) if not g.has_edge(seq[i], seq[(i + 1) % k])]


def iter_o_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """All o-cycles of ``g``, one canonical sequence each."""
    return iter_cycles(ore_closure_graph(g))


def covering_cycle(g: Graph, required: int, node_limit: int | None = None) -> OrientedCycle | None:
    """Exhaustive search for a real cycle whose vertex set contains ``required``.

    Prefers the shortest such cycle; ``None`` when none exists. Exponential, desk
    scale only. ``node_limit`` bounds the number of search nodes per length.
    """
    if not required:
        return None
    s = (required & -required).bit_length() - 1
    adj = g.adj
    need = required.bit_count()
    for length in range(max(3, need), g.n + 1):
        budget = [node_limit]
        path = [s]

        def walk(v: int, used: int) -> tuple[int, ...] | None:
            if budget[0] is not None:
                budget[0] -= 1
                if budget[0] < 0:
                    return None
            missing = (required & ~used).bit_count()
            if missing > length - len(path):
                return None
            if len(path) == length:
                if adj[v] >> s & 1 and not required & ~used:
                    return tuple(path)
                return None
            for w in iter_bits(adj[v] & ~used):
                path.append(w)
                found = walk(w, used | 1 << w)
                path.pop()
                if found:
                    return found
            return None

        found = walk(s, 1 << s)
        if found:
            return OrientedCycle(found)
    return None


def _exchange_step(g: Graph, cyc: list[int]) -> list[int] | None:
    """Remove one pseudo edge from ``cyc``; ``None`` if neither move applies."""
    k = len(cyc)
    pos = pseudo_positions(g, cyc)
    # largest degree sum first, then earliest position along the orientation
    i = min(pos, key=lambda p: (-(g.deg[cyc[p]] + g.deg[cyc[(p + 1) % k]]), p))
    x, y = cyc[i], cyc[(i + 1) % k]
    # path y = p0, ..., pm = x obtained by dropping the pseudo edge
    path = cyc[i + 1 :] + cyc[: i + 1]
    m = len(path) - 1
    for j in range(m):
        if g.has_edge(x, path[j]) and g.has_edge(y, path[j + 1]):
            return path[: j + 1] + path[j + 1 :][::-1]
    # no crossing: the degree-sum bound forces a common neighbour off the path
    common = g.adj[x] & g.adj[y] & ~mask_of(path)
    if common:
        z = (common & -common).bit_length() - 1
        return path + [z]
    return None


def realize_cycle(g: Graph, oc: Sequence[int], method: str = "exchange") -> OrientedCycle:
    """A real cycle of ``g`` through every vertex of the o-cycle ``oc``.

    ``method="exchange"`` eliminates pseudo edges one by one, either by a
    crossing exchange along the cycle or by routing through a common outside
    neighbour; if neither applies it falls back to exhaustive search.
    ``method="exhaustive"`` goes straight to the search. The result is never
    shorter than ``oc``.
    """
    seq = list(oc)
    if not is_o_cycle(g, seq):
        raise GraphError(f"not an o-cycle: {seq}")
    if method not in ("exchange", "exhaustive"):
        raise GraphError(f"unknown realisation method {method!r}")
    if method == "exchange":
        cyc = seq
        while pseudo_positions(g, cyc):
            nxt = _exchange_step(g, cyc)
            if nxt is None:
                break
            cyc = nxt
        else:
            return OrientedCycle(cyc)
    required = mask_of(seq)
    found = covering_cycle(g, required)
    if found is None:
        raise RealizationError(f"no real cycle covers o-cycle {seq}")
    if len(found) < len(seq):
        raise RealizationError(f"realisation of {seq} shrank to {list(found)}")
    return found
