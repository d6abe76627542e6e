"""Independent brute-force oracles used to freeze expected values.

The matrix exponential here is a plain scaling-and-squaring Taylor series on
the full complex matrix. It shares no code path with the spectral walk
engine (which diagonalizes), so agreement between the two is a real check.
"""

from __future__ import annotations

import numpy as np


def series_expm(m: np.ndarray) -> np.ndarray:
    """exp(m) by Taylor series with scaling and squaring."""
    a = np.asarray(m, dtype=complex)
    n = a.shape[0]
    if n == 0:
        return np.zeros((0, 0), dtype=complex)
    norm = np.abs(a).sum(axis=1).max()  # induced infinity norm
    squarings = max(0, int(np.ceil(np.log2(norm))) + 1) if norm > 0 else 0
    a = a / (2.0**squarings)
    term = np.eye(n, dtype=complex)
    total = np.eye(n, dtype=complex)
    for k in range(1, 60):
        term = term @ a / k
        total = total + term
        if np.abs(term).max() < 1e-20:
            break
    for _ in range(squarings):
        total = total @ total
    return total


def walk_oracle(matrix: np.ndarray, t: float) -> np.ndarray:
    """exp(-i t M) via the series oracle."""
    return series_expm(-1j * t * np.asarray(matrix, dtype=float))


def dense_scan_max(matrix: np.ndarray, pair: tuple[int, int], t_max: float, samples: int) -> float:
    """Max |entry| of the oracle walk on a uniform grid; slow but independent."""
    u, v = pair
    best = 0.0
    for t in np.linspace(0.0, t_max, samples):
        best = max(best, abs(walk_oracle(matrix, t)[v, u]))
    return best
