"""Named graphs used as fixtures and in the CLI."""

from __future__ import annotations

from itertools import combinations

from .graph_core import Graph


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with sides ``0..a-1`` and ``a..a+b-1``."""
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` centred at 0."""
    return complete_bipartite(1, leaves)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def z_graph(i: int) -> Graph:
    """Triangle ``0,1,2`` with a path of length ``i`` hanging off vertex 0.

    For ``Z2`` the labels read a1=0, a2=1, a3=2, b1=3, c1=4.
    """
    edges = [(0, 1), (0, 2), (1, 2)]
    prev = 0
    for k in range(i):
        edges.append((prev, 3 + k))
        prev = 3 + k
    return Graph.from_edges(3 + i, edges)


def k4_minus_edge() -> Graph:
    """``K4`` without the edge ``{0, 3}``."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of ``g``; vertex ``i`` stands for ``edges[i]``."""
    edges = list(g.edges())
    pairs = [(i, j) for i, j in combinations(range(len(edges)), 2) if set(edges[i]) & set(edges[j])]
    return Graph.from_edges(len(edges), pairs), edges


def theta_graph(lengths: tuple[int, ...]) -> Graph:
    """Internally disjoint paths of the given lengths between vertices 0 and 1."""
    edges = []
    nxt = 2
    for length in lengths:
        path = [0] + list(range(nxt, nxt + length - 1)) + [1]
        nxt += length - 1
        edges += list(zip(path, path[1:]))
    return Graph.from_edges(nxt, edges)


THETA_LENGTHS = ((3, 3, 3), (3, 3, 4), (3, 4, 4), (4, 4, 4), (3, 3, 5))


def theta_line_family(lengths=THETA_LENGTHS) -> list[Graph]:
    """Line graphs of theta graphs with all paths of length at least 3.

    They are claw-free and 2-connected but not Hamiltonian: a closed trail
    of the theta graph uses at most two of its paths and so misses a middle
    edge of the third.
    """
    return [line_graph(theta_graph(t))[0] for t in lengths]


def two_heavy_sharpness_graph() -> Graph:
    """Two nonadjacent hubs 0, 1 joined to an edge 2-3 and to loose vertices 4, 5.

    2-connected and 1-heavy, every distance-two pair has two common
    neighbours, yet deleting the hubs leaves three components.
    """
    return Graph.from_edges(6, [(2, 3)] + [(h, v) for h in (0, 1) for v in (2, 3, 4, 5)])


NAMED = {
    "petersen": petersen_graph,
    "k33": lambda: complete_bipartite(3, 3),
    "c6": lambda: cycle_graph(6),
    "k4": lambda: complete_graph(4),
    "z1": lambda: z_graph(1),
    "z2": lambda: z_graph(2),
    "k4-e": k4_minus_edge,
    "theta333": lambda: line_graph(theta_graph((3, 3, 3)))[0],
}
