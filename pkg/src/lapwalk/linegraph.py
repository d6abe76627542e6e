"""Intertwining between the signless-Laplacian walk on a graph and the
adjacency walk on its line graph, plus the transfer and refutation tooling
built on it.

With the normalized incidence matrix B (entries 1/sqrt(2) on incidences) the
products satisfy B B^T = Q/2 and B^T B = A(line)/2 + I, which gives

    B^T exp(-itQ) = exp(-2it) exp(-itA(line)) B^T

and its two companions. Edge indices always follow the graph's canonical
edge order, the same order line_graph and incidence report.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graphs import Graph, line_graph, path
from .operators import adjacency, incidence, signless_laplacian
from .pst import PST_TOL, REFUTE_THRESHOLD, PstCertificate, Refuted, search_pst, verify_pst
from .spectral import walk

__all__ = [
    "intertwine_check",
    "pst_transfer_to_line",
    "LineTransferReport",
    "path_signless_refutation",
    "PathScanRow",
]


def intertwine_check(g: Graph, t: float) -> tuple[float, float, float]:
    """Max-norm deviations of the three intertwining identities at time t."""
    b = incidence(g).matrix
    lg, _ = line_graph(g)
    uq = walk(signless_laplacian(g), t).matrix
    ua = walk(adjacency(lg), t).matrix
    phase = cmath.exp(-2j * t)
    dev_a = float(np.abs(b.T @ uq - phase * ua @ b.T).max()) if g.edge_count else 0.0
    dev_b = float(np.abs(uq @ b - phase * b @ ua).max()) if g.edge_count else 0.0
    dev_c = (
        float(np.abs(b.T @ uq @ b - phase * ua @ (b.T @ b)).max()) if g.edge_count else 0.0
    )
    return dev_a, dev_b, dev_c


@dataclass(frozen=True)
class LineTransferReport:
    """Both sides of the endpoint-transfer correspondence: the signless walk
    between two vertices and the adjacency walk between their pendant edges."""

    source_magnitude: float
    source_certified: bool
    line_pair: tuple[int, int] | None
    line_magnitude: float | None
    line_certified: bool | None


def _pendant_edge_index(g: Graph, u: int) -> int:
    hits = [i for i, (a, b, _) in enumerate(g.edges) if u in (a, b)]
    if len(hits) != 1:
        raise ValueError(f"vertex {u} has degree {len(hits)}, expected 1")
    return hits[0]


def pst_transfer_to_line(
    g: Graph, u1: int, u2: int, t: float, pst_tol: float = PST_TOL
) -> LineTransferReport:
    """Check transfer from a degree-one vertex u1 to u2 under the signless
    Laplacian and, when it certifies, confirm that u2 also has degree one and
    that the line graph transfers between the two pendant edges at the same
    time under the adjacency matrix.

    Single-edge graphs are rejected: their line graph is a single vertex and
    the statement degenerates.
    """
    if g.edge_count < 2:
        raise ValueError("transfer to the line graph needs at least two edges")
    degs = g.degrees()
    if degs[u1] != 1:
        raise ValueError(f"vertex {u1} must have degree one")
    source = verify_pst(signless_laplacian(g), (u1, u2), t, pst_tol)
    if isinstance(source, Refuted):
        return LineTransferReport(source.magnitude, False, None, None, None)
    if degs[u2] != 1:
        raise RuntimeError(
            f"certified transfer into vertex {u2} of degree {int(degs[u2])}; "
            "the target of endpoint transfer must be pendant"
        )
    e1 = _pendant_edge_index(g, u1)
    e2 = _pendant_edge_index(g, u2)
    lg, _ = line_graph(g)
    line_res = verify_pst(adjacency(lg), (e1, e2), t, pst_tol)
    certified = isinstance(line_res, PstCertificate)
    return LineTransferReport(
        source.magnitude,
        True,
        (e1, e2),
        line_res.magnitude,
        certified,
    )


@dataclass(frozen=True)
class PathScanRow:
    n: int
    max_magnitude: float
    best_time: float

    @property
    def refuted(self) -> bool:
        return self.max_magnitude < REFUTE_THRESHOLD


def path_signless_refutation(
    ns: Iterable[int], t_max: float = 200.0
) -> list[PathScanRow]:
    """Scan the endpoint-to-endpoint signless walk magnitude on paths; the
    known negative result starts at five vertices, so smaller n is rejected."""
    rows = []
    for n in ns:
        if n < 5:
            raise ValueError("the endpoint refutation applies to paths on >= 5 vertices")
        cert = search_pst(signless_laplacian(path(n)), (0, n - 1), t_max)
        rows.append(PathScanRow(n, cert.magnitude, cert.time))
    return rows
