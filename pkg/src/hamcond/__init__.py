"""Hamiltonicity under forbidden-subgraph and heavy-subgraph conditions.

Hypothesis predicates for eleven sufficient conditions (claw-free, 1-heavy,
2-heavy, o-heavy graphs with Fan and Shi pair conditions), a constructive
Hamilton cycle finder that follows the extension arguments, an exact solver,
and a desk-scale harness that checks the theorems and their lemmas.
"""

from __future__ import annotations

from .engine import Certificate, find_hamiltonian, longest_cycle
from .graph_core import Graph, GraphError, OrientedCycle, build_graph, is_k_connected
from .ore import ore_edges, realize_cycle
from .patterns import THEOREMS, Pattern, check_hypothesis, enumerate_induced, heavy_class

__all__ = [
    "Certificate",
    "Graph",
    "GraphError",
    "OrientedCycle",
    "Pattern",
    "THEOREMS",
    "build_graph",
    "check_hypothesis",
    "enumerate_induced",
    "find_hamiltonian",
    "heavy_class",
    "is_k_connected",
    "longest_cycle",
    "ore_edges",
    "realize_cycle",
]
