"""Bipartite entanglement measures for pure N-mode Gaussian states.

For a pure state the entanglement between one mode and the rest is a
function of the single-mode determinant alone; in standard form that
determinant splits into pairwise correlation contributions, so the same
entropy can be recovered from two-point data.  Pairwise entanglement
between mode pairs is quantified by the logarithmic negativity of the
reduced two-mode state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import tolerances
from .errors import NotPureError
from .standard_form import StandardForm
from .symplectic import (
    CovarianceMatrix,
    is_pure,
    reduced_cm,
    symplectic_eigenvalues,
)

_LN2 = math.log(2.0)


@dataclass(frozen=True, eq=False)
class EntanglementReport:
    """Per-mode and pairwise entanglement summary of a pure state.

    Attributes:
        per_mode_entropy: entropy of entanglement of each mode vs the rest,
            in ebits.
        schmidt_parameter: the single nontrivial Schmidt value for the
            designated one-vs-rest bipartition, at least 1.
        pairwise_logneg: symmetric N x N matrix of two-mode logarithmic
            negativities (zero diagonal), in ebits.
        pairwise_detblocks: symmetric N x N matrix of the determinants of
            the 2x2 cross-covariance blocks (zero diagonal).
    """

    per_mode_entropy: tuple
    schmidt_parameter: float
    pairwise_logneg: np.ndarray
    pairwise_detblocks: np.ndarray

    def to_dict(self) -> dict:
        return {
            "per_mode_entropy": list(self.per_mode_entropy),
            "schmidt_parameter": self.schmidt_parameter,
            "pairwise_logneg": self.pairwise_logneg.tolist(),
            "pairwise_detblocks": self.pairwise_detblocks.tolist(),
        }


def bosonic_entropy(nu: float, nats: bool = False) -> float:
    """Entropy contribution of one symplectic eigenvalue.

    ``f(nu) = ((nu+1)/2) log2((nu+1)/2) - ((nu-1)/2) log2((nu-1)/2)``,
    strictly increasing for nu > 1 with the limit f(1) = 0 taken
    explicitly (values within 1e-12 of 1 map to 0).

    Args:
        nu: symplectic eigenvalue, at least 1 up to roundoff.
        nats: report in natural-log units instead of ebits.
    """
    if nu - 1.0 < 1e-12:
        return 0.0
    up = (nu + 1.0) / 2.0
    down = (nu - 1.0) / 2.0
    value = up * math.log2(up) - down * math.log2(down)
    return value * _LN2 if nats else value


def _require_pure(cm: CovarianceMatrix) -> None:
    purity = is_pure(cm)
    if not purity:
        raise NotPureError(purity.residual, tolerances.purity(cm.inf_norm()))


def schmidt_parameter(cm: CovarianceMatrix, mode_index: int) -> float:
    """Nontrivial Schmidt value of the one-vs-rest split: sqrt(det sigma_i).

    Equals the single non-unit symplectic eigenvalue of the complementary
    (N-1)-mode reduction.

    Raises:
        NotPureError: for mixed inputs.
    """
    _require_pure(cm)
    block = cm.mode_block(mode_index)
    return float(np.sqrt(np.linalg.det(block)))


def entropy_one_vs_rest(
    cm: CovarianceMatrix, mode_index: int, nats: bool = False
) -> float:
    """Entropy of entanglement between one mode and the remaining N-1."""
    return bosonic_entropy(schmidt_parameter(cm, mode_index), nats=nats)


def entropy_via_pairwise(
    sf: StandardForm, mode_index: int, nats: bool = False
) -> float:
    """One-vs-rest entropy recovered from pairwise correlations alone.

    Uses ``det sigma_i = 1 - sum_{j != i} det eps_ij`` on the standard
    form, where ``det eps_ij = vq_ij * vp_ij``.

    Raises:
        ValueError: if the accumulated determinant turns out negative,
            which signals numerically inconsistent input.
    """
    n = sf.n_modes
    if not 1 <= mode_index <= n:
        raise ValueError(f"mode index {mode_index} out of range for {n} modes")
    i = mode_index - 1
    cross = sum(sf.vq[i, j] * sf.vp[i, j] for j in range(n) if j != i)
    det_block = 1.0 - cross
    if det_block < 0.0:
        raise ValueError(
            f"pairwise accounting gave a negative determinant ({det_block:.3e}); "
            "the standard form is numerically inconsistent"
        )
    return bosonic_entropy(math.sqrt(det_block), nats=nats)


def log_negativity_pair(
    cm: CovarianceMatrix, mode_i: int, mode_j: int, nats: bool = False
) -> float:
    """Logarithmic negativity between two modes of a state.

    Reduces to the (i, j) pair, negates the momentum of the second listed
    mode (partial transposition), and evaluates ``max(0, -log2 nu_min)``
    from the smallest symplectic eigenvalue of the transposed matrix.
    """
    if mode_i == mode_j:
        raise ValueError(f"log negativity needs two distinct modes, got {mode_i} twice")
    pair = reduced_cm(cm, (mode_i, mode_j))
    flip = np.diag([1.0, 1.0, 1.0, -1.0])
    transposed = flip @ pair.data @ flip
    nu_min = float(symplectic_eigenvalues(transposed)[-1])
    value = max(0.0, -math.log2(nu_min))
    return value * _LN2 if nats else value


def full_report(cm: CovarianceMatrix, schmidt_mode: int = 1) -> EntanglementReport:
    """Assemble all per-mode and pairwise quantities for a pure state.

    Args:
        cm: pure covariance matrix.
        schmidt_mode: 1-based mode defining the reported one-vs-rest
            Schmidt parameter.
    """
    _require_pure(cm)
    n = cm.n_modes
    entropies = tuple(entropy_one_vs_rest(cm, k) for k in range(1, n + 1))
    logneg = np.zeros((n, n))
    detblocks = np.zeros((n, n))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            value = log_negativity_pair(cm, i, j)
            logneg[i - 1, j - 1] = logneg[j - 1, i - 1] = value
            det = float(np.linalg.det(cm.cross_block(i, j)))
            detblocks[i - 1, j - 1] = detblocks[j - 1, i - 1] = det
    return EntanglementReport(
        per_mode_entropy=entropies,
        schmidt_parameter=schmidt_parameter(cm, schmidt_mode),
        pairwise_logneg=logneg,
        pairwise_detblocks=detblocks,
    )


def pairwise_csv(matrix: np.ndarray) -> str:
    """Render a pairwise N x N matrix as CSV with mode-index headers."""
    matrix = np.asarray(matrix)
    n = matrix.shape[0]
    header = "mode," + ",".join(str(k) for k in range(1, n + 1))
    lines = [header]
    for i in range(n):
        cells = ",".join(format(float(v), ".17g") for v in matrix[i])
        lines.append(f"{i + 1},{cells}")
    return "\n".join(lines) + "\n"
