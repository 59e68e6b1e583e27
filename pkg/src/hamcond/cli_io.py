"""graph6 and edge-list serialisation.

All vertex ids are 0-based.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .graph_core import Graph, GraphError

GRAPH6_CAP = 4096
GRAPH6_HEADER = ">>graph6<<"


class ParseError(GraphError):
    """Malformed input; ``where`` is a byte offset (graph6) or a line number (edge list)."""

    def __init__(self, message: str, where: int | None = None):
        super().__init__(message)
        self.where = where


def _n_bytes(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise GraphError(f"graph6 cannot encode n={n} here")


def encode_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + sum(b << (5 - k) for k, b in enumerate(bits[i : i + 6])) for i in range(0, len(bits), 6)
    )
    return (_n_bytes(g.n) + body).decode("ascii")


def parse_graph6(line: str) -> Graph:
    line = line.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER) :]
    if not line:
        raise ParseError("empty graph6 record", 0)
    data = line.encode("ascii", errors="replace")
    for off, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise ParseError(f"byte {off}: character {chr(ch)!r} outside graph6 range", off)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) < 4:
            raise ParseError("byte 1: truncated vertex count", min(len(data), 1))
        if data[1] == 126:
            raise ParseError(f"byte 1: vertex count exceeds cap {GRAPH6_CAP}", 1)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    if n > GRAPH6_CAP:
        raise ParseError(f"byte 0: n={n} exceeds cap {GRAPH6_CAP}", 0)
    want = -(-(n * (n - 1) // 2) // 6)
    got = len(data) - pos
    if got != want:
        raise ParseError(
            f"byte {pos + min(got, want)}: expected {want} edge bytes for n={n}, found {got}",
            pos + min(got, want),
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    # padding bits must be zero for an exact round trip
    if k % 6 and (data[-1] - 63) & ((1 << (6 - k % 6)) - 1):
        raise ParseError(f"byte {len(data) - 1}: nonzero padding bits", len(data) - 1)
    return Graph(n, adj)


def parse_edge_list(text: str) -> Graph:
    """``n m`` header, then ``m`` lines ``u v``; ``#`` lines and blank lines are ignored."""
    header = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {raw.strip()!r}", lineno) from None
        if len(nums) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {len(nums)}", lineno)
        if header is None:
            n, m = nums
            if n < 0 or m < 0:
                raise ParseError(f"line {lineno}: negative header values", lineno)
            header = (n, m, lineno)
            continue
        u, v = nums
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex id out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append(key)
    if header is None:
        raise ParseError("line 1: missing 'n m' header", 1)
    n, m, hline = header
    if len(edges) != m:
        raise ParseError(f"line {hline}: header announces {m} edges, found {len(edges)}", hline)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def is_edge_list_path(path: str | Path) -> bool:
    return Path(path).suffix.lower() in (".el", ".edges", ".txt")


def read_graphs(path: str | Path) -> Iterator[Graph]:
    """Graphs in a file: a single edge-list document (``.el``, ``.edges``,
    ``.txt``) or one graph6 record per line otherwise."""
    text = Path(path).read_text(encoding="ascii")
    if is_edge_list_path(path):
        yield parse_edge_list(text)
        return
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}", exc.where) from None


def read_graph(path: str | Path) -> Graph:
    graphs = list(read_graphs(path))
    if len(graphs) != 1:
        raise ParseError(f"{path}: expected exactly one graph, found {len(graphs)}")
    return graphs[0]
