"""Symmetric matrices attached to a graph: adjacency, the three Laplacians,
the normalized incidence matrix, and the bipartite sign change.

All constructors build their matrices symmetrically entry by entry, so
``matrix == matrix.T`` holds exactly (no after-the-fact symmetrization).
A loop of weight w contributes w to the adjacency diagonal and w to that
vertex's degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .graphs import Graph

__all__ = [
    "OperatorKind",
    "Hamiltonian",
    "IncidenceMatrix",
    "NotBipartiteError",
    "adjacency",
    "degree_matrix",
    "standard_laplacian",
    "signless_laplacian",
    "normalized_laplacian",
    "operator",
    "weighted_p3",
    "incidence",
    "bipartite_signing",
]


class OperatorKind(str, Enum):
    ADJACENCY = "adjacency"
    STANDARD = "standard"
    SIGNLESS = "signless"
    NORMALIZED = "normalized"
    CUSTOM = "custom"

    @classmethod
    def from_name(cls, name: str) -> "OperatorKind":
        alias = {"laplacian": "standard", "a": "adjacency", "l": "standard", "q": "signless"}
        key = name.strip().lower()
        key = alias.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown operator kind {name!r}") from None


@dataclass(frozen=True)
class Hamiltonian:
    """Real symmetric matrix tagged with the operator kind it came from."""

    kind: OperatorKind
    matrix: np.ndarray
    graph: Graph | None = None

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("matrix must be square")
        if not (m == m.T).all():
            raise ValueError("matrix must be exactly symmetric")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


def adjacency(g: Graph) -> Hamiltonian:
    return Hamiltonian(OperatorKind.ADJACENCY, g.adjacency(), g)


def degree_matrix(g: Graph) -> np.ndarray:
    """Diagonal degree matrix; plain array since it is never walked on."""
    return np.diag(g.degrees())


def standard_laplacian(g: Graph) -> Hamiltonian:
    return Hamiltonian(OperatorKind.STANDARD, degree_matrix(g) - g.adjacency(), g)


def signless_laplacian(g: Graph) -> Hamiltonian:
    return Hamiltonian(OperatorKind.SIGNLESS, degree_matrix(g) + g.adjacency(), g)


def normalized_laplacian(g: Graph) -> Hamiltonian:
    """I - D^{-1/2} A D^{-1/2}; defined here for unweighted loop-free graphs
    with minimum degree one."""
    if not g.is_unweighted:
        raise ValueError("normalized Laplacian is only supported on unweighted, loop-free graphs")
    d = g.degrees()
    if g.n and d.min() < 1:
        v = int(np.argmin(d))
        raise ValueError(f"normalized Laplacian undefined: vertex {v} is isolated")
    scale = 1.0 / np.sqrt(d)
    m = np.eye(g.n) - g.adjacency() * np.outer(scale, scale)
    return Hamiltonian(OperatorKind.NORMALIZED, m, g)


_BUILDERS = {
    OperatorKind.ADJACENCY: adjacency,
    OperatorKind.STANDARD: standard_laplacian,
    OperatorKind.SIGNLESS: signless_laplacian,
    OperatorKind.NORMALIZED: normalized_laplacian,
}


def operator(g: Graph, kind: OperatorKind | str) -> Hamiltonian:
    """Dispatch to the operator constructor for ``kind``."""
    k = kind if isinstance(kind, OperatorKind) else OperatorKind.from_name(kind)
    if k not in _BUILDERS:
        raise ValueError(f"no graph operator for kind {k}")
    return _BUILDERS[k](g)


def weighted_p3(alpha: float) -> Hamiltonian:
    """Three-vertex path with a self-loop of weight alpha on the middle vertex,
    handed over as a custom matrix: [[0,1,0],[1,alpha,1],[0,1,0]]."""
    a = float(alpha)
    if not math.isfinite(a):
        raise ValueError("alpha must be finite")
    m = np.array([[0.0, 1.0, 0.0], [1.0, a, 1.0], [0.0, 1.0, 0.0]])
    return Hamiltonian(OperatorKind.CUSTOM, m)


@dataclass(frozen=True)
class IncidenceMatrix:
    """Normalized vertex-edge incidence: entry 1/sqrt(2) where the vertex lies
    on the edge. Columns follow the graph's canonical edge order (the same
    ordering line_graph reports)."""

    matrix: np.ndarray
    edges: tuple[tuple[int, int], ...]


def incidence(g: Graph) -> IncidenceMatrix:
    if not g.is_unweighted:
        raise ValueError("incidence matrix requires an unweighted, loop-free graph")
    b = np.zeros((g.n, g.edge_count))
    half = 1.0 / math.sqrt(2.0)
    for i, (u, v, _) in enumerate(g.edges):
        b[u, i] = half
        b[v, i] = half
    return IncidenceMatrix(b, tuple((u, v) for u, v, _ in g.edges))


class NotBipartiteError(ValueError):
    """Raised when a two-coloring is requested but an odd cycle exists."""

    def __init__(self, edge: tuple[int, int]):
        self.edge = edge
        super().__init__(f"graph is not bipartite: edge {edge} closes an odd cycle")


def bipartite_signing(g: Graph) -> np.ndarray:
    """Diagonal of the +-1 matrix S with S A S^{-1} = -A, from a BFS
    two-coloring. Requires a connected graph."""
    if not g.is_connected():
        raise ValueError("bipartite signing requires a connected graph")
    colors = g.bipartition()
    if colors is None:
        forced = _greedy_two_color(g)
        witness = next((u, v) for u, v, _ in g.edges if forced[u] == forced[v])
        raise NotBipartiteError(witness)
    return np.where(colors == 0, 1.0, -1.0)


def _greedy_two_color(g: Graph) -> np.ndarray:
    """BFS coloring that never fails; on a nonbipartite graph some edge ends
    up monochromatic and serves as the odd-cycle witness."""
    color = np.full(g.n, -1, dtype=int)
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop(0)
            for v in g.neighbors[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
    return color
