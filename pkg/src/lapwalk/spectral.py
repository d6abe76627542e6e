"""Eigendecomposition with clustered spectral projectors, walk operator
evaluation, and closed-form walk entries for joins and the weighted
three-vertex path.

The walk is always evaluated through the spectral decomposition
U(t) = sum_k exp(-i t lambda_k) E_k, never by series summation: unitarity is
then exact up to projector error no matter how large t gets, and degenerate
spectra (hypercubes, products) stay stable because projectors are built from
whole eigenvalue clusters.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .operators import Hamiltonian, OperatorKind

__all__ = [
    "EigenDecomposition",
    "WalkOperator",
    "eigendecompose",
    "walk",
    "fidelity",
    "p3_alpha_fidelity",
    "p3_alpha_pst_condition",
    "join_walk_entry",
    "join_cross_entry",
    "cartesian_walk_check",
]


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues plus orthogonal projectors onto the clustered
    eigenspaces. ``values[k]`` is the representative of cluster k and
    ``projectors[k]`` the corresponding projector."""

    eigenvalues: np.ndarray
    values: np.ndarray
    projectors: tuple[np.ndarray, ...]
    multiplicities: tuple[int, ...]
    kind: OperatorKind = OperatorKind.CUSTOM

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def spectral_range(self) -> float:
        if self.n == 0:
            return 0.0
        return float(self.eigenvalues[-1] - self.eigenvalues[0])

    def pair_weights(self, source: int, target: int) -> np.ndarray:
        """Entry (target, source) of every projector; the walk entry is then
        sum_k weights[k] * exp(-i t values[k])."""
        return np.array([p[target, source] for p in self.projectors])

    def amplitude(self, source: int, target: int, times) -> np.ndarray:
        ts = np.atleast_1d(np.asarray(times, dtype=float))
        w = self.pair_weights(source, target)
        return np.exp(-1j * np.outer(ts, self.values)) @ w

    def matrix_at(self, t: float) -> np.ndarray:
        if t == 0.0:
            return np.eye(self.n, dtype=complex)
        phases = np.exp(-1j * t * self.values)
        stack = np.stack(self.projectors)
        return np.tensordot(phases, stack, axes=1)


def eigendecompose(
    source: Hamiltonian | np.ndarray, cluster_tol: float | None = None
) -> EigenDecomposition:
    """Symmetric eigensolve with eigenvalue clustering.

    Eigenvalues closer than ``cluster_tol`` (default 1e-8 times the spectral
    range) are merged into one cluster and their eigenvectors into a single
    projector; this keeps projectors well defined on degenerate spectra.
    """
    if isinstance(source, Hamiltonian):
        m = source.matrix
        kind = source.kind
    else:
        m = np.asarray(source, dtype=float)
        kind = OperatorKind.CUSTOM
        if m.ndim != 2 or m.shape[0] != m.shape[1] or not np.allclose(m, m.T, atol=0.0):
            raise ValueError("eigendecompose needs a square symmetric matrix")
    try:
        evals, evecs = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - eigh rarely fails
        raise RuntimeError(f"eigensolver failed: {exc}") from exc

    n = len(evals)
    if n == 0:
        return EigenDecomposition(evals, evals, (), (), kind)
    spread = float(evals[-1] - evals[0])
    if cluster_tol is None:
        cluster_tol = 1e-8 * spread
    breaks = [i for i in range(1, n) if evals[i] - evals[i - 1] > cluster_tol]
    starts = [0] + breaks
    stops = breaks + [n]
    values = []
    projectors = []
    mults = []
    for a, b in zip(starts, stops):
        block = evecs[:, a:b]
        values.append(float(np.mean(evals[a:b])))
        projectors.append(block @ block.T)
        mults.append(b - a)
    return EigenDecomposition(
        eigenvalues=evals,
        values=np.array(values),
        projectors=tuple(projectors),
        multiplicities=tuple(mults),
        kind=kind,
    )


@dataclass(frozen=True)
class WalkOperator:
    """exp(-i t M) for the tagged time t; exactly the identity at t = 0."""

    time: float
    matrix: np.ndarray


def _as_decomposition(source) -> EigenDecomposition:
    if isinstance(source, EigenDecomposition):
        return source
    return eigendecompose(source)


def walk(source: Hamiltonian | EigenDecomposition | np.ndarray, t: float) -> WalkOperator:
    dec = _as_decomposition(source)
    return WalkOperator(time=float(t), matrix=dec.matrix_at(float(t)))


def fidelity(source, pair: tuple[int, int], t: float) -> tuple[float, float]:
    """Magnitude and phase of the walk entry from pair[0] to pair[1] at t."""
    dec = _as_decomposition(source)
    u, v = pair
    amp = complex(dec.amplitude(u, v, [t])[0])
    return abs(amp), cmath.phase(amp)


# -- closed forms -----------------------------------------------------------


def p3_alpha_fidelity(alpha: float, t: float) -> complex:
    """Antipodal walk entry of the weighted three-vertex path, in closed form:
    -1/2 + (exp(-i t a/2)/2) (cos(D t) + i (a/2)/D sin(D t)), D^2 = (a/2)^2 + 2.
    """
    half = alpha / 2.0
    delta = math.sqrt(half * half + 2.0)
    osc = math.cos(delta * t) + 1j * (half / delta) * math.sin(delta * t)
    return -0.5 + 0.5 * cmath.exp(-1j * t * half) * osc


def p3_alpha_pst_condition(alpha: float, t: float, tol: float = 1e-9) -> bool:
    """Exact transfer condition for the weighted path:
    exp(-i t alpha/2) cos(D t) = -1."""
    half = alpha / 2.0
    delta = math.sqrt(half * half + 2.0)
    return abs(cmath.exp(-1j * t * half) * math.cos(delta * t) + 1.0) < tol


def join_walk_entry(
    g_dec: EigenDecomposition, m: int, n: int, pair: tuple[int, int], t: float
) -> complex:
    """Walk entry inside the m-vertex factor of a join with an n-vertex graph,
    relative to the standard Laplacian:

        e^{-itn} <u|e^{-itL(G)}|v> + (e^{-it(m+n)} - e^{-itn})/m
                                   + (1 - e^{-it(m+n)})/(m+n).

    ``g_dec`` is the decomposition of L(G) alone.
    """
    u, v = pair
    inner = complex(g_dec.amplitude(u, v, [t])[0])
    e_n = cmath.exp(-1j * t * n)
    e_mn = cmath.exp(-1j * t * (m + n))
    return e_n * inner + (e_mn - e_n) / m + (1.0 - e_mn) / (m + n)


def join_cross_entry(m: int, n: int, t: float) -> complex:
    """Walk entry between the two sides of a join under the standard
    Laplacian: (1 - e^{-it(m+n)})/(m+n), independent of the vertices."""
    return (1.0 - cmath.exp(-1j * t * (m + n))) / (m + n)


def cartesian_walk_check(h_g: Hamiltonian, h_h: Hamiltonian, t: float) -> float:
    """Max-norm deviation between the walk on the box product and the
    Kronecker product of the factor walks, for standard/signless Laplacians."""
    from .graphs import cartesian_product
    from .operators import operator

    if h_g.kind != h_h.kind:
        raise ValueError("factors must use the same operator kind")
    if h_g.kind not in (OperatorKind.STANDARD, OperatorKind.SIGNLESS):
        raise ValueError("factorization holds for the standard or signless Laplacian")
    if h_g.graph is None or h_h.graph is None:
        raise ValueError("both Hamiltonians must carry their source graph")
    product = cartesian_product(h_g.graph, h_h.graph)
    direct = walk(operator(product, h_g.kind), t).matrix
    factored = np.kron(walk(h_g, t).matrix, walk(h_h, t).matrix)
    return float(np.abs(direct - factored).max())
