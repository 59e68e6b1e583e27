"""Induced claws, Z1, Z2 and K_{1,4}; heavy classes; theorem hypotheses.

All degree and neighbourhood conditions are evaluated in the host graph.
Only the "distance two" requirement of the restricted theorems is read
inside the induced copy, which is what the role tables below encode.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator

from .graph_core import (
    Graph,
    GraphError,
    VertexSet,
    components,
    distance,
    distance_two_pairs,
    iter_bits,
    separating_set,
)


class Pattern(str, Enum):
    CLAW = "claw"
    Z1 = "z1"
    Z2 = "z2"
    K14 = "k14"


ROLES: dict[Pattern, tuple[str, ...]] = {
    Pattern.CLAW: ("center", "e1", "e2", "e3"),
    Pattern.Z1: ("a1", "a2", "a3", "b1"),
    Pattern.Z2: ("a1", "a2", "a3", "b1", "c1"),
    Pattern.K14: ("center", "e1", "e2", "e3", "e4"),
}

PATTERN_EDGES: dict[Pattern, frozenset[frozenset[str]]] = {
    Pattern.CLAW: frozenset(frozenset(("center", e)) for e in ("e1", "e2", "e3")),
    Pattern.Z1: frozenset(
        frozenset(p) for p in [("a1", "a2"), ("a1", "a3"), ("a2", "a3"), ("a1", "b1")]
    ),
    Pattern.Z2: frozenset(
        frozenset(p)
        for p in [("a1", "a2"), ("a1", "a3"), ("a2", "a3"), ("a1", "b1"), ("b1", "c1")]
    ),
    Pattern.K14: frozenset(frozenset(("center", e)) for e in ("e1", "e2", "e3", "e4")),
}

# role pairs at distance two inside the pattern itself
DISTANCE_TWO_ROLES: dict[Pattern, tuple[tuple[str, str], ...]] = {
    Pattern.CLAW: (("e1", "e2"), ("e1", "e3"), ("e2", "e3")),
    Pattern.Z1: (("a2", "b1"), ("a3", "b1")),
    Pattern.Z2: (("a1", "c1"), ("a2", "b1"), ("a3", "b1")),
    Pattern.K14: tuple(
        (f"e{i}", f"e{j}") for i in range(1, 5) for j in range(i + 1, 5)
    ),
}

# the weaker pair set used by the Z2-restricted result with pairs {a2,b1}, {a3,b1}
Z2_SIDE_PAIRS = (("a2", "b1"), ("a3", "b1"))


@dataclass(frozen=True)
class InducedCopy:
    pattern: Pattern
    roles: tuple[tuple[str, int], ...]

    def __getitem__(self, role: str) -> int:
        for name, v in self.roles:
            if name == role:
                return v
        raise KeyError(role)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.roles)

    def as_dict(self) -> dict[str, int]:
        return dict(self.roles)

    def is_valid(self, g: Graph) -> bool:
        """Re-check that the roles induce exactly the pattern in ``g``."""
        names = ROLES[self.pattern]
        if tuple(r for r, _ in self.roles) != names:
            return False
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
            return False
        edges = PATTERN_EDGES[self.pattern]
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                want = frozenset((names[i], names[j])) in edges
                if g.has_edge(vs[i], vs[j]) != want:
                    return False
        return True

    def __str__(self) -> str:
        return " ".join(f"{r}={v}" for r, v in self.roles)


def _copy(pattern: Pattern, *vs: int) -> InducedCopy:
    return InducedCopy(pattern, tuple(zip(ROLES[pattern], vs)))


def _above(v: int) -> int:
    return ~((1 << (v + 1)) - 1)


def iter_induced(g: Graph, pattern: Pattern | str) -> Iterator[InducedCopy]:
    """Lazily yield canonical induced copies in ascending role-tuple order."""
    pattern = Pattern(pattern)
    adj = g.adj
    if pattern is Pattern.CLAW or pattern is Pattern.K14:
        leaves = 3 if pattern is Pattern.CLAW else 4
        for c in range(g.n):
            yield from _stars(pattern, c, [], adj[c], leaves, adj)
    elif pattern is Pattern.Z1 or pattern is Pattern.Z2:
        for a1 in range(g.n):
            n1 = adj[a1]
            for a2 in iter_bits(n1):
                for a3 in iter_bits(n1 & adj[a2] & _above(a2)):
                    tri = (1 << a1) | (1 << a2) | (1 << a3)
                    pend = n1 & ~adj[a2] & ~adj[a3] & ~tri
                    for b1 in iter_bits(pend):
                        if pattern is Pattern.Z1:
                            yield _copy(pattern, a1, a2, a3, b1)
                            continue
                        tail = adj[b1] & ~adj[a1] & ~adj[a2] & ~adj[a3] & ~tri
                        for c1 in iter_bits(tail):
                            yield _copy(pattern, a1, a2, a3, b1, c1)


def _stars(pattern, c, chosen, cand, left, adj):
    if left == 0:
        yield _copy(pattern, c, *chosen)
        return
    for e in iter_bits(cand):
        yield from _stars(pattern, c, chosen + [e], cand & ~adj[e] & _above(e), left - 1, adj)


def enumerate_induced(g: Graph, pattern: Pattern | str) -> list[InducedCopy]:
    return list(iter_induced(g, pattern))


def is_heavy(g: Graph, v: int) -> bool:
    return 2 * g.deg[v] >= g.n


def ore_pair(g: Graph, u: int, v: int) -> bool:
    """Degree sum at least ``n``."""
    return g.deg[u] + g.deg[v] >= g.n


def fan_condition(g: Graph, u: int, v: int) -> bool:
    if u == v:
        raise GraphError("the degree pair condition needs two distinct vertices")
    return is_heavy(g, u) or is_heavy(g, v)


def shi_condition(g: Graph, u: int, v: int) -> bool:
    if u == v:
        raise GraphError("the common-neighbour pair condition needs two distinct vertices")
    return (g.adj[u] & g.adj[v]).bit_count() >= 2


def fan_or_shi(g: Graph, u: int, v: int) -> bool:
    return fan_condition(g, u, v) or shi_condition(g, u, v)


def _require_order(g: Graph) -> None:
    if g.n < 3:
        raise GraphError(f"need n >= 3, got n={g.n}")


# claw acceptance tests per heavy class; each returns True when the claw is fine
def _claw_one_heavy(g: Graph, c: InducedCopy) -> bool:
    return any(is_heavy(g, c[e]) for e in ("e1", "e2", "e3"))


def _claw_two_heavy(g: Graph, c: InducedCopy) -> bool:
    return sum(is_heavy(g, c[e]) for e in ("e1", "e2", "e3")) >= 2


def _claw_o_heavy(g: Graph, c: InducedCopy) -> bool:
    return any(ore_pair(g, c[x], c[y]) for x, y in DISTANCE_TWO_ROLES[Pattern.CLAW])


def _k14_o_heavy(g: Graph, c: InducedCopy) -> bool:
    # the only non-adjacent pairs of a K_{1,4} are leaf pairs
    return any(ore_pair(g, c[x], c[y]) for x, y in DISTANCE_TWO_ROLES[Pattern.K14])


HEAVY_TESTS: dict[str, tuple[Pattern, Callable[[Graph, InducedCopy], bool]]] = {
    "claw_free": (Pattern.CLAW, lambda g, c: False),
    "one_heavy": (Pattern.CLAW, _claw_one_heavy),
    "two_heavy": (Pattern.CLAW, _claw_two_heavy),
    "o_heavy": (Pattern.CLAW, _claw_o_heavy),
    "k14_o_heavy": (Pattern.K14, _k14_o_heavy),
}

_HEAVY_REASON = {
    "claw_free": "induced_claw",
    "one_heavy": "light_claw",
    "two_heavy": "claw_not_2heavy",
    "o_heavy": "claw_not_oheavy",
    "k14_o_heavy": "k14_not_oheavy",
}


def heavy_violation(g: Graph, flag: str) -> InducedCopy | None:
    """First induced copy breaking the named heavy-class flag, if any."""
    pattern, ok = HEAVY_TESTS[flag]
    for c in iter_induced(g, pattern):
        if not ok(g, c):
            return c
    return None


@dataclass(frozen=True)
class HeavyClass:
    claw_free: bool
    one_heavy: bool
    two_heavy: bool
    o_heavy: bool
    k14_o_heavy: bool


def heavy_class(g: Graph) -> HeavyClass:
    _require_order(g)
    claws = enumerate_induced(g, Pattern.CLAW)
    return HeavyClass(
        claw_free=not claws,
        one_heavy=all(_claw_one_heavy(g, c) for c in claws),
        two_heavy=all(_claw_two_heavy(g, c) for c in claws),
        o_heavy=all(_claw_o_heavy(g, c) for c in claws),
        k14_o_heavy=all(_k14_o_heavy(g, c) for c in iter_induced(g, Pattern.K14)),
    )


# ---------------------------------------------------------------- hypotheses

THEOREMS = tuple(f"T{i}" for i in range(1, 12))


@dataclass(frozen=True)
class Witness:
    """Why a hypothesis fails.

    ``reason`` is one of: ``too_small``, ``separator``, ``induced_claw``,
    ``induced_z1``, ``induced_z2``, ``light_claw``, ``claw_not_2heavy``,
    ``claw_not_oheavy``, ``pair``.
    """

    reason: str
    vertices: tuple[int, ...] = ()
    copy: InducedCopy | None = None
    condition: str = ""

    def __str__(self) -> str:
        parts = [self.reason]
        if self.condition:
            parts.append(f"condition={self.condition}")
        if self.copy is not None:
            parts.append(f"{self.copy.pattern.value}: {self.copy}")
        elif self.vertices:
            parts.append("vertices=" + " ".join(map(str, self.vertices)))
        return " ".join(parts)


@dataclass(frozen=True)
class HypothesisReport:
    theorem: str
    satisfied: bool
    witness: Witness | None = field(default=None)

    @property
    def verdict(self) -> str:
        return "satisfied" if self.satisfied else "violated"


PAIR_TESTS = {
    "fan": fan_condition,
    "shi": shi_condition,
    "fan_or_shi": fan_or_shi,
}

# theorem -> (connectivity, heavy flag or forbidden patterns, pair rule)
# pair rule: (scope, condition) with scope "all" for every distance-two pair of
# G, or (Pattern, role pairs) for pairs inside induced copies
_HYPOTHESES: dict[str, tuple[int, tuple[str, ...], tuple | None]] = {
    "T1": (2, (), ("all", "fan")),
    "T2": (2, ("claw", "z1"), None),
    "T3": (2, ("claw", "z2"), None),
    "T4": (2, ("claw_free",), ("all", "shi")),
    "T5": (2, ("two_heavy",), ("all", "fan_or_shi")),
    "T6": (3, ("one_heavy",), ("all", "fan_or_shi")),
    "T7": (2, ("o_heavy",), ((Pattern.Z1, DISTANCE_TWO_ROLES[Pattern.Z1]), "fan_or_shi")),
    "T8": (2, ("o_heavy",), ((Pattern.Z2, DISTANCE_TWO_ROLES[Pattern.Z2]), "fan")),
    "T9": (2, ("o_heavy",), ((Pattern.Z2, DISTANCE_TWO_ROLES[Pattern.Z2]), "fan_or_shi")),
    "T10": (2, ("o_heavy",), ((Pattern.Z2, Z2_SIDE_PAIRS), "fan_or_shi")),
    "T11": (3, ("one_heavy",), ((Pattern.Z1, DISTANCE_TWO_ROLES[Pattern.Z1]), "fan_or_shi")),
}


def theorem_connectivity(theorem: str) -> int:
    return _HYPOTHESES[_theorem(theorem)][0]


def _theorem(theorem: str) -> str:
    t = theorem.upper()
    if t not in _HYPOTHESES:
        raise GraphError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")
    return t


def _structural_witness(g: Graph, cond: str) -> Witness | None:
    if cond in ("claw", "z1", "z2"):
        for c in iter_induced(g, cond):
            return Witness(f"induced_{cond}", c.vertices, c)
        return None
    c = heavy_violation(g, cond)
    return None if c is None else Witness(_HEAVY_REASON[cond], c.vertices, c)


def _pair_witness(g: Graph, rule) -> Witness | None:
    scope, cond = rule
    test = PAIR_TESTS[cond]
    if scope == "all":
        for u, v in distance_two_pairs(g):
            if not test(g, u, v):
                return Witness("pair", (u, v), None, cond)
        return None
    pattern, pairs = scope
    for c in iter_induced(g, pattern):
        for x, y in pairs:
            if not test(g, c[x], c[y]):
                return Witness("pair", (c[x], c[y]), c, cond)
    return None


def _connectivity_witness(g: Graph, k: int) -> Witness | None:
    if g.n <= k:
        return Witness("too_small", tuple(range(g.n)))
    cut = separating_set(g, k)
    return None if cut is None else Witness("separator", tuple(cut))


def check_hypothesis(g: Graph, theorem: str) -> HypothesisReport:
    """Evaluate the exact hypothesis of theorem ``T1``..``T11`` on ``g``.

    Checks run cheapest-first (structure, pair rule, connectivity); the first
    failure found becomes the witness.
    """
    _require_order(g)
    t = _theorem(theorem)
    k, structure, rule = _HYPOTHESES[t]
    for cond in structure:
        w = _structural_witness(g, cond)
        if w is not None:
            return HypothesisReport(t, False, w)
    if rule is not None:
        w = _pair_witness(g, rule)
        if w is not None:
            return HypothesisReport(t, False, w)
    w = _connectivity_witness(g, k)
    if w is not None:
        return HypothesisReport(t, False, w)
    return HypothesisReport(t, True)


def hypothesis_holds(g: Graph, theorem: str) -> bool:
    return check_hypothesis(g, theorem).satisfied


def recheck_witness(g: Graph, report: HypothesisReport) -> bool:
    """Independently confirm that a violation witness really violates the hypothesis."""
    w = report.witness
    if report.satisfied:
        return w is None
    if w is None:
        return False
    k, structure, rule = _HYPOTHESES[_theorem(report.theorem)]
    if w.reason == "too_small":
        return g.n <= k
    if w.reason == "separator":
        rest = g.all_mask & ~VertexSet(w.vertices).mask
        return len(w.vertices) < k and len(components(g, rest)) != 1
    if w.reason == "pair":
        u, v = w.vertices
        if w.copy is None:
            in_scope = rule is not None and rule[0] == "all" and distance(g, u, v) == 2
        else:
            in_scope = (
                rule is not None
                and rule[0] != "all"
                and w.copy.pattern is rule[0][0]
                and w.copy.is_valid(g)
                and any({w.copy[x], w.copy[y]} == {u, v} for x, y in rule[0][1])
            )
        return in_scope and w.condition == rule[1] and not PAIR_TESTS[w.condition](g, u, v)
    c = w.copy
    if c is None or not c.is_valid(g):
        return False
    if w.reason.startswith("induced_"):
        pat = w.reason.removeprefix("induced_")
        return pat in structure or (pat == "claw" and "claw_free" in structure)
    for flag, reason in _HEAVY_REASON.items():
        if reason == w.reason and flag in structure:
            return not HEAVY_TESTS[flag][1](g, c)
    return False
