"""Shared helpers for the test suite."""

import numpy as np
import pytest

from gaussforge.symplectic import SymplecticMatrix


def random_local_symplectic(n_modes: int, rng: np.random.Generator) -> SymplecticMatrix:
    """Random single-mode (local) symplectic on every mode: rotation-squeeze-rotation."""
    data = np.eye(2 * n_modes)
    for k in range(n_modes):
        t1, t2 = rng.uniform(0.0, 2.0 * np.pi, size=2)
        d = np.exp(rng.uniform(-0.8, 0.8))
        r1 = np.array([[np.cos(t1), -np.sin(t1)], [np.sin(t1), np.cos(t1)]])
        r2 = np.array([[np.cos(t2), -np.sin(t2)], [np.sin(t2), np.cos(t2)]])
        data[2 * k : 2 * k + 2, 2 * k : 2 * k + 2] = r1 @ np.diag([d, 1.0 / d]) @ r2
    return SymplecticMatrix(n_modes, data)


def random_spd(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Random symmetric positive-definite matrix, comfortably conditioned."""
    a = rng.standard_normal((dim, dim))
    m = a @ a.T + 0.5 * dim * np.eye(dim)
    return (m + m.T) / 2.0


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
