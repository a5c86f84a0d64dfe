"""Shared test fixtures: small random states and reference matrices."""

import numpy as np

from triuncert import DensityMatrix

SX = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SY = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SZ = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def random_qubit_matrix(rng) -> np.ndarray:
    """Random full-rank 2x2 density matrix (Wishart-normalized)."""
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    m = g @ g.conj().T
    return m / np.trace(m).real


def random_qubit_dm(rng) -> DensityMatrix:
    return DensityMatrix((2,), random_qubit_matrix(rng))


def random_hermitian(rng, d: int = 8) -> np.ndarray:
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return g + g.conj().T


def bell_pair_dm() -> DensityMatrix:
    """(|00> + |11>)/sqrt(2) as a two-qubit density matrix."""
    m = np.zeros((4, 4), dtype=np.complex128)
    for i in (0, 3):
        for j in (0, 3):
            m[i, j] = 0.5
    return DensityMatrix((2, 2), m)
