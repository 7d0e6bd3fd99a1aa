"""Dense phase-space linear algebra for N-mode Gaussian states.

Covariance matrices (CMs) are 2N x 2N real symmetric matrices over the
mode-interleaved quadrature ordering (q1, p1, ..., qN, pN), normalized so
that the vacuum CM is the identity.  Gaussian unitaries act on CMs by
congruence with symplectic matrices, i.e. matrices S with S^T Omega S =
Omega for the antisymmetric form Omega.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import tolerances
from .errors import InputFormatError

ORDERING = "qpqp"


def symplectic_form(n_modes: int) -> np.ndarray:
    """Return the 2N x 2N symplectic form, a direct sum of ((0, 1), (-1, 0)) blocks.

    Args:
        n_modes: number of modes N, at least 1.

    Returns:
        The antisymmetric matrix Omega with Omega @ Omega = -identity.
    """
    if n_modes < 1:
        raise ValueError(f"n_modes must be >= 1, got {n_modes}")
    omega = np.zeros((2 * n_modes, 2 * n_modes))
    for k in range(n_modes):
        omega[2 * k, 2 * k + 1] = 1.0
        omega[2 * k + 1, 2 * k] = -1.0
    return omega


def _mode_rows(mode_index: int) -> slice:
    """Rows/columns of a 1-based mode in the interleaved ordering."""
    return slice(2 * (mode_index - 1), 2 * mode_index)


def _check_mode_index(mode_index: int, n_modes: int) -> None:
    if not 1 <= mode_index <= n_modes:
        raise ValueError(
            f"mode index {mode_index} out of range for {n_modes} modes"
        )


@dataclass(frozen=True, eq=False)
class CovarianceMatrix:
    """Second moments of a zero-mean N-mode Gaussian state.

    Attributes:
        n_modes: number of modes N.
        data: 2N x 2N real symmetric matrix, interleaved ordering,
            vacuum variance 1.
    """

    n_modes: int
    data: np.ndarray

    def __post_init__(self):
        if self.n_modes < 1:
            raise ValueError(f"n_modes must be >= 1, got {self.n_modes}")
        data = np.array(self.data, dtype=float)
        dim = 2 * self.n_modes
        if data.shape != (dim, dim):
            raise ValueError(
                f"expected a {dim}x{dim} matrix for {self.n_modes} modes, "
                f"got shape {data.shape}"
            )
        if not np.all(np.isfinite(data)):
            raise ValueError("covariance matrix entries must be finite")
        if not np.array_equal(data, data.T):
            raise ValueError("covariance matrix must be symmetric")
        data.flags.writeable = False
        object.__setattr__(self, "data", data)

    def inf_norm(self) -> float:
        """Largest absolute entry."""
        return float(np.max(np.abs(self.data)))

    def mode_block(self, mode_index: int) -> np.ndarray:
        """2x2 diagonal block of a single 1-based mode."""
        _check_mode_index(mode_index, self.n_modes)
        rows = _mode_rows(mode_index)
        return np.array(self.data[rows, rows])

    def cross_block(self, mode_i: int, mode_j: int) -> np.ndarray:
        """2x2 off-diagonal block coupling two 1-based modes."""
        _check_mode_index(mode_i, self.n_modes)
        _check_mode_index(mode_j, self.n_modes)
        return np.array(self.data[_mode_rows(mode_i), _mode_rows(mode_j)])

    def to_dict(self) -> dict:
        """JSON-ready document: ``{"n_modes", "ordering", "data"}``."""
        return {
            "n_modes": self.n_modes,
            "ordering": ORDERING,
            "data": self.data.tolist(),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "CovarianceMatrix":
        """Build from a matrix-exchange document, validating the schema."""
        if not isinstance(doc, dict):
            raise InputFormatError("covariance document must be a JSON object")
        for key in ("n_modes", "ordering", "data"):
            if key not in doc:
                raise InputFormatError(f"covariance document missing key {key!r}")
        if doc["ordering"] != ORDERING:
            raise InputFormatError(
                f"unsupported ordering {doc['ordering']!r}; expected {ORDERING!r}"
            )
        n_modes = doc["n_modes"]
        if not isinstance(n_modes, int) or n_modes < 1:
            raise InputFormatError("n_modes must be a positive integer")
        try:
            data = np.array(doc["data"], dtype=float)
        except (TypeError, ValueError) as exc:
            raise InputFormatError(f"data is not a numeric matrix: {exc}") from None
        if data.shape != (2 * n_modes, 2 * n_modes):
            raise InputFormatError(
                f"data must be a {2 * n_modes}x{2 * n_modes} row-major array"
            )
        return cls(n_modes, data)


@dataclass(frozen=True, eq=False)
class SymplecticMatrix:
    """Phase-space action of a Gaussian unitary.

    The constructor enforces the symplectic condition up to roundoff:
    ``|S^T Omega S - Omega|_inf <= 1e-10 * max(1, |S|_inf)^2``.
    """

    n_modes: int
    data: np.ndarray

    def __post_init__(self):
        if self.n_modes < 1:
            raise ValueError(f"n_modes must be >= 1, got {self.n_modes}")
        data = np.array(self.data, dtype=float)
        dim = 2 * self.n_modes
        if data.shape != (dim, dim):
            raise ValueError(
                f"expected a {dim}x{dim} matrix for {self.n_modes} modes, "
                f"got shape {data.shape}"
            )
        omega = symplectic_form(self.n_modes)
        defect = float(np.max(np.abs(data.T @ omega @ data - omega)))
        norm = float(np.max(np.abs(data)))
        if defect > tolerances.symplectic(norm):
            raise ValueError(
                f"matrix is not symplectic: defect {defect:.3e} exceeds "
                f"{tolerances.symplectic(norm):.3e}"
            )
        data.flags.writeable = False
        object.__setattr__(self, "data", data)

    def inf_norm(self) -> float:
        return float(np.max(np.abs(self.data)))

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        if self.n_modes != other.n_modes:
            raise ValueError(
                f"mode count mismatch: {self.n_modes} vs {other.n_modes}"
            )
        return SymplecticMatrix(self.n_modes, self.data @ other.data)


@dataclass(frozen=True)
class SymplecticSpectrum:
    """Williamson spectrum of a covariance matrix.

    Attributes:
        values: the N symplectic eigenvalues, sorted descending.
        rank: number of eigenvalues exceeding 1 beyond the rank tolerance
            (0 for pure states).
    """

    values: tuple
    rank: int


@dataclass(frozen=True)
class PurityResult:
    """Outcome of the purity-identity check; truthy iff the state is pure."""

    pure: bool
    residual: float

    def __bool__(self) -> bool:
        return self.pure


def vacuum_cm(n_modes: int) -> CovarianceMatrix:
    """Covariance matrix of the N-mode vacuum (the 2N x 2N identity)."""
    if n_modes < 1:
        raise ValueError(f"n_modes must be >= 1, got {n_modes}")
    return CovarianceMatrix(n_modes, np.eye(2 * n_modes))


def squeezer(n_modes: int, mode_index: int, s: float) -> SymplecticMatrix:
    """Single-mode squeezing by a factor ``s``.

    Acts as diag(s, 1/s) on the (q, p) pair of the addressed mode and as
    the identity elsewhere; ``s = 1`` is a no-op.

    Args:
        n_modes: total number of modes.
        mode_index: 1-based mode to squeeze.
        s: squeezing factor, strictly positive.
    """
    _check_mode_index(mode_index, n_modes)
    if not s > 0.0:
        raise ValueError(f"squeezing factor must be positive, got {s}")
    data = np.eye(2 * n_modes)
    data[2 * (mode_index - 1), 2 * (mode_index - 1)] = s
    data[2 * mode_index - 1, 2 * mode_index - 1] = 1.0 / s
    return SymplecticMatrix(n_modes, data)


def beam_splitter(
    n_modes: int, mode_i: int, mode_j: int, t: float
) -> SymplecticMatrix:
    """Beam splitter of transmittivity ``t`` between two modes.

    On the (q_i, p_i, q_j, p_j) subspace the matrix is
    ``((sqrt(t) I, sqrt(1-t) I), (-sqrt(1-t) I, sqrt(t) I))``; it is both
    symplectic and orthogonal, and acts identically on the q and p
    quadratures.

    Args:
        n_modes: total number of modes.
        mode_i: first 1-based mode.
        mode_j: second 1-based mode, different from ``mode_i``.
        t: transmittivity, strictly inside (0, 1); 1/2 is balanced.
    """
    _check_mode_index(mode_i, n_modes)
    _check_mode_index(mode_j, n_modes)
    if mode_i == mode_j:
        raise ValueError(f"beam splitter needs two distinct modes, got {mode_i} twice")
    if not 0.0 < t < 1.0:
        raise ValueError(f"transmittivity must lie strictly in (0, 1), got {t}")
    ct = np.sqrt(t)
    st = np.sqrt(1.0 - t)
    data = np.eye(2 * n_modes)
    eye2 = np.eye(2)
    ri, rj = _mode_rows(mode_i), _mode_rows(mode_j)
    data[ri, ri] = ct * eye2
    data[ri, rj] = st * eye2
    data[rj, ri] = -st * eye2
    data[rj, rj] = ct * eye2
    return SymplecticMatrix(n_modes, data)


def apply_symplectic(cm: CovarianceMatrix, s: SymplecticMatrix) -> CovarianceMatrix:
    """Transform a state by congruence, ``sigma -> S^T sigma S``.

    The result is re-symmetrized to remove roundoff drift, so chaining
    transformations keeps the CM exactly symmetric.
    """
    if cm.n_modes != s.n_modes:
        raise ValueError(
            f"mode count mismatch: CM has {cm.n_modes}, symplectic has {s.n_modes}"
        )
    transformed = s.data.T @ cm.data @ s.data
    return CovarianceMatrix(cm.n_modes, (transformed + transformed.T) / 2.0)


def _psd_sqrt(matrix: np.ndarray) -> np.ndarray:
    """Symmetric square root of a symmetric positive-definite matrix."""
    eigenvalues, eigenvectors = np.linalg.eigh(matrix)
    if eigenvalues[0] <= 0.0:
        raise ValueError(
            f"matrix is not positive definite (min eigenvalue {eigenvalues[0]:.3e})"
        )
    root = (eigenvectors * np.sqrt(eigenvalues)) @ eigenvectors.T
    return (root + root.T) / 2.0


def symplectic_eigenvalues(matrix: np.ndarray) -> np.ndarray:
    """Raw symplectic eigenvalues of a symmetric positive-definite matrix.

    Computed as the positive square roots of the eigenvalues of the
    symmetric matrix ``m^{1/2} Omega^T m Omega m^{1/2}``; the 2N roots come
    in pairs that are averaged to absorb roundoff splitting.  No clamping
    toward 1 is applied, so the result is meaningful for partially
    transposed matrices as well as physical CMs.

    Returns:
        The N eigenvalues sorted descending.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] % 2:
        raise ValueError(f"expected a 2N x 2N matrix, got shape {matrix.shape}")
    n_modes = matrix.shape[0] // 2
    omega = symplectic_form(n_modes)
    root = _psd_sqrt(matrix)
    core = root @ omega.T @ matrix @ omega @ root
    core = (core + core.T) / 2.0
    squares = np.linalg.eigvalsh(core)
    doubled = np.sqrt(np.maximum(squares, 0.0))[::-1]
    return (doubled[0::2] + doubled[1::2]) / 2.0


def williamson_spectrum(cm: CovarianceMatrix) -> SymplecticSpectrum:
    """Williamson spectrum of a positive-definite covariance matrix.

    Eigenvalues within the rank tolerance below 1 are clamped up to 1;
    the rank counts eigenvalues exceeding 1 beyond the same tolerance.

    Raises:
        ValueError: if the matrix is not positive definite.
    """
    values = symplectic_eigenvalues(cm.data)
    tol = tolerances.rank()
    clamped = np.where((values < 1.0) & (values >= 1.0 - tol), 1.0, values)
    rank = int(np.sum(clamped > 1.0 + tol))
    return SymplecticSpectrum(tuple(float(v) for v in clamped), rank)


def symplectic_rank(cm: CovarianceMatrix) -> int:
    """Number of symplectic eigenvalues different from 1 (0 for pure states)."""
    return williamson_spectrum(cm).rank


def is_bona_fide(cm: CovarianceMatrix) -> bool:
    """Check the uncertainty condition ``sigma + i Omega >= 0``.

    Tested as all symplectic eigenvalues reaching 1 within the rank
    tolerance; positive definiteness is required first.
    """
    try:
        values = symplectic_eigenvalues(cm.data)
    except ValueError:
        return False
    return bool(values[-1] >= 1.0 - tolerances.rank())


def purity_residual(cm: CovarianceMatrix) -> float:
    """Infinity norm of ``-Omega sigma Omega sigma - identity``."""
    omega = symplectic_form(cm.n_modes)
    residual = -omega @ cm.data @ omega @ cm.data - np.eye(2 * cm.n_modes)
    return float(np.max(np.abs(residual)))


def is_pure(cm: CovarianceMatrix) -> PurityResult:
    """Check the pure-state matrix identity ``-Omega sigma Omega sigma = 1``.

    Returns:
        A truthy :class:`PurityResult` carrying the residual norm; the
        verdict uses a tolerance that scales with the squared CM norm.
    """
    residual = purity_residual(cm)
    return PurityResult(residual <= tolerances.purity(cm.inf_norm()), residual)


def reduced_cm(cm: CovarianceMatrix, mode_subset) -> CovarianceMatrix:
    """Restrict a state to a subset of modes (partial trace).

    Args:
        cm: input covariance matrix.
        mode_subset: nonempty sequence of distinct 1-based mode indices;
            the output modes follow the order given.
    """
    modes = list(mode_subset)
    if not modes:
        raise ValueError("mode subset must be nonempty")
    if len(set(modes)) != len(modes):
        raise ValueError(f"mode subset has repeated entries: {modes}")
    for mode in modes:
        _check_mode_index(mode, cm.n_modes)
    rows = np.concatenate([[2 * (m - 1), 2 * m - 1] for m in modes])
    return CovarianceMatrix(len(modes), cm.data[np.ix_(rows, rows)])
