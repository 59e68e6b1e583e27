"""Immutable simple graphs over bitset adjacency, plus oriented-cycle arithmetic.

Vertices are ``0..n-1``. Every neighbourhood is a Python ``int`` used as a
bitset, so the representation has no upper bound on ``n``; desk-scale
graphs (``n <= 64``) fit in a single machine word, larger ones simply use
more limbs.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs, cycles or queries."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class VertexSet:
    """Immutable bitset of vertex ids."""

    __slots__ = ("mask",)

    def __init__(self, vertices: Iterable[int] | int = 0):
        if isinstance(vertices, int):
            if vertices < 0:
                raise GraphError("negative bitmask")
            self.mask = vertices
        else:
            self.mask = mask_of(vertices)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        if isinstance(other, (set, frozenset)):
            return self.mask == mask_of(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask)

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)})"


class Graph:
    """Immutable simple undirected graph.

    ``adj[v]`` is the neighbourhood bitset of ``v``; ``deg[v]`` caches its size.
    """

    __slots__ = ("n", "adj", "deg", "_m")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or len(adj) != n:
            raise GraphError("adjacency length must equal n")
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full:
                raise GraphError(f"vertex {v} has an out-of-range neighbour")
            if a >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for w in iter_bits(a):
                if not adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "deg", tuple(a.bit_count() for a in adj))
        object.__setattr__(self, "_m", sum(self.deg) // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return self.deg[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def min_degree(self) -> int:
        return min(self.deg) if self.n else 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, silently merging parallel edges and rejecting self-loops."""
    return Graph.from_edges(n, edges)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def distance(g: Graph, u: int, v: int) -> int | None:
    """Hop distance from ``u`` to ``v``; ``None`` when unreachable."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        return 0
    seen = 1 << u
    frontier = 1 << u
    d = 0
    target = 1 << v
    while frontier:
        d += 1
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= g.adj[w]
        nxt &= ~seen
        if nxt & target:
            return d
        seen |= nxt
        frontier = nxt
    return None


def distance_two_pairs(g: Graph) -> Iterator[tuple[int, int]]:
    """All pairs ``u < v`` with ``d(u, v) == 2``, ascending."""
    for u in range(g.n):
        two = 0
        for w in iter_bits(g.adj[u]):
            two |= g.adj[w]
        two &= ~g.adj[u] & ~((1 << (u + 1)) - 1)
        for v in iter_bits(two):
            yield u, v


def common_neighbors(g: Graph, u: int, v: int) -> VertexSet:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphError("common_neighbors needs two distinct vertices")
    return VertexSet(g.adj[u] & g.adj[v] & ~(1 << u) & ~(1 << v))


def reach(g: Graph, start: int, allowed: int) -> int:
    """Bitset of vertices reachable from ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= g.adj[w]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph, allowed: int | None = None) -> list[int]:
    """Connected components of ``g[allowed]`` as bitsets, ordered by least vertex."""
    rest = g.all_mask if allowed is None else allowed
    out = []
    while rest:
        comp = reach(g, lowest_bit(rest), rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n == 0 or reach(g, 0, g.all_mask) == g.all_mask


def _vertex_flow(g: Graph, s: int, t: int, limit: int) -> tuple[int, int]:
    """Unit-vertex-capacity max flow from ``s`` to non-adjacent ``t``.

    Stops once ``limit`` paths are found. Returns ``(flow, cut)`` where ``cut``
    is a minimum ``s``-``t`` vertex separator (meaningful when ``flow < limit``).
    Node ``2v`` is ``v``'s entry, ``2v+1`` its exit.
    """
    cap: dict[int, dict[int, int]] = {}

    def arc(a: int, b: int, c: int) -> None:
        cap.setdefault(a, {})
        cap.setdefault(b, {})
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    big = g.n + 1
    for v in range(g.n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)
    src, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        parent = {src: src}
        queue = deque([src])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != src:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
    if flow >= limit:
        return flow, 0
    # residual reachability from the source gives the minimum cut
    seen = {src}
    queue = deque([src])
    while queue:
        a = queue.popleft()
        for b, c in cap[a].items():
            if c > 0 and b not in seen:
                seen.add(b)
                queue.append(b)
    cut = 0
    for v in range(g.n):
        if 2 * v in seen and 2 * v + 1 not in seen:
            cut |= 1 << v
    return flow, cut


def local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint ``s``-``t`` paths (``s``, ``t`` non-adjacent)."""
    if s == t or g.has_edge(s, t):
        raise GraphError("local connectivity is defined for distinct non-adjacent vertices")
    return _vertex_flow(g, s, t, g.n)[0]


def separating_set(g: Graph, k: int) -> VertexSet | None:
    """A vertex set of size < ``k`` whose removal disconnects ``g``, or ``None``.

    When ``g`` has at most ``k`` vertices and is complete there is no separator
    at all; callers treat ``n <= k`` as a failure separately.
    """
    if k < 1:
        raise GraphError("k must be positive")
    if not is_connected(g):
        return VertexSet()
    if k == 1:
        return None
    for s in range(g.n):
        for t in iter_bits(~g.adj[s] & g.all_mask & ~((1 << (s + 1)) - 1)):
            flow, cut = _vertex_flow(g, s, t, k)
            if flow < k:
                return VertexSet(cut)
    return None


def is_k_connected(g: Graph, k: int) -> bool:
    """``n > k`` and no fewer than ``k`` vertices disconnect ``g`` (Menger via vertex flow)."""
    if k < 1:
        raise GraphError("k must be positive")
    if g.n <= k or g.min_degree() < k:
        return False
    return separating_set(g, k) is None


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """``g[s]`` relabelled to ``0..|s|-1``; the tuple maps new ids to original ones."""
    mask = s.mask if isinstance(s, VertexSet) else mask_of(s)
    if not mask:
        raise GraphError("induced subgraph of an empty vertex set")
    if mask >> g.n:
        raise GraphError("vertex set not contained in the graph")
    ids = tuple(iter_bits(mask))
    index = {v: i for i, v in enumerate(ids)}
    adj = []
    for v in ids:
        a = 0
        for w in iter_bits(g.adj[v] & mask):
            a |= 1 << index[w]
        adj.append(a)
    return Graph(len(ids), adj), ids


class OrientedCycle:
    """A cyclic vertex sequence with a fixed orientation.

    ``successor`` / ``predecessor`` are ``v+`` / ``v-``; ``segment(u, v)`` walks
    from ``u`` to ``v`` along the orientation, both ends included.
    """

    __slots__ = ("seq", "_pos", "mask")

    def __init__(self, seq: Iterable[int]):
        seq = tuple(seq)
        if len(seq) < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        pos = {v: i for i, v in enumerate(seq)}
        if len(pos) != len(seq):
            raise GraphError("cycle vertices must be distinct")
        object.__setattr__(self, "seq", seq)
        object.__setattr__(self, "_pos", pos)
        object.__setattr__(self, "mask", mask_of(seq))

    def __setattr__(self, name, value):
        raise AttributeError("OrientedCycle is immutable")

    def __reduce__(self):
        return (OrientedCycle, (self.seq,))

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self) -> Iterator[int]:
        return iter(self.seq)

    def __contains__(self, v: object) -> bool:
        return v in self._pos

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OrientedCycle) and self.seq == other.seq

    def __hash__(self) -> int:
        return hash(self.seq)

    def __repr__(self) -> str:
        return f"OrientedCycle({list(self.seq)})"

    def index(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise GraphError(f"vertex {v} is not on the cycle") from None

    def shift(self, v: int, k: int) -> int:
        return self.seq[(self.index(v) + k) % len(self.seq)]

    def successor(self, v: int) -> int:
        return self.shift(v, 1)

    def predecessor(self, v: int) -> int:
        return self.shift(v, -1)

    def second_successor(self, v: int) -> int:
        return self.shift(v, 2)

    def second_predecessor(self, v: int) -> int:
        return self.shift(v, -2)

    def successors(self, vs: Iterable[int]) -> set[int]:
        return {self.successor(v) for v in vs}

    def predecessors(self, vs: Iterable[int]) -> set[int]:
        return {self.predecessor(v) for v in vs}

    def segment(self, u: int, v: int) -> list[int]:
        i, j = self.index(u), self.index(v)
        if j >= i:
            return list(self.seq[i : j + 1])
        return list(self.seq[i:]) + list(self.seq[: j + 1])

    def reverse(self) -> "OrientedCycle":
        return OrientedCycle((self.seq[0],) + tuple(reversed(self.seq[1:])))

    def rotate_to(self, v: int) -> "OrientedCycle":
        i = self.index(v)
        return OrientedCycle(self.seq[i:] + self.seq[:i])

    def edges(self) -> Iterator[tuple[int, int]]:
        k = len(self.seq)
        for i in range(k):
            yield self.seq[i], self.seq[(i + 1) % k]


def is_valid_cycle(g: Graph, c: OrientedCycle | Sequence[int]) -> bool:
    """True iff ``c`` lists distinct vertices of ``g`` joined cyclically by real edges."""
    seq = tuple(c)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def iter_cycles(g: Graph, within: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every cycle of ``g[within]`` once, as ``(s, a, ..., b)`` with ``s`` minimal and ``a < b``.

    Output is in lexicographic order of these canonical sequences.
    """
    allowed = g.all_mask if within is None else within
    adj = g.adj
    for s in iter_bits(allowed):
        room = allowed & ~((1 << (s + 1)) - 1)
        path = [s]

        def walk(v: int, free: int) -> Iterator[tuple[int, ...]]:
            for w in iter_bits(adj[v] & free):
                path.append(w)
                if len(path) >= 3 and adj[w] >> s & 1 and path[1] < w:
                    yield tuple(path)
                yield from walk(w, free & ~(1 << w))
                path.pop()

        yield from walk(s, room)
