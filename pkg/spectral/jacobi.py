"""
Cyclic Jacobi eigensolver for small dense symmetric matrices.

Each sweep visits every (p, q) pair above the diagonal and applies the
rotation that zeroes M[p, q]. Sweeps stop once the off-diagonal Frobenius
norm drops to `jacobi_offdiag * (1 + ||M||_F)`.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from config.settings import settings
from config.tolerances import TOLERANCES
from execution.models.errors import EigensolverConvergenceError
from observability.logger import get_logger
from spectral.matrix import SymMatrix

logger = get_logger(__name__)


@dataclass(frozen=True)
class EigenPair:
    value: float
    vector: np.ndarray


def off_diagonal_norm(a: np.ndarray) -> float:
    return float(math.sqrt(max(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)), 0.0)))


def jacobi_eigh(
    values: np.ndarray,
    max_sweeps: Optional[int] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigen-decomposition of a symmetric array.

    Returns:
        (eigenvalues ascending, eigenvectors as columns)

    Raises:
        EigensolverConvergenceError: sweeps exhausted
    """
    a = np.array(values, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    if n <= 1:
        return np.diag(a).copy(), v

    sweeps_cap = max_sweeps if max_sweeps is not None else TOLERANCES.jacobi_max_sweeps
    threshold = TOLERANCES.jacobi_offdiag * (1.0 + float(np.linalg.norm(a)))

    off = off_diagonal_norm(a)
    sweep = 0
    while off > threshold:
        if sweep >= sweeps_cap:
            logger.warning("jacobi_not_converged", order=n, sweeps=sweep, off_norm=off)
            raise EigensolverConvergenceError(
                f"Jacobi did not converge after {sweep} sweeps (off-diagonal norm {off:.3e})",
                off_norm=off,
                sweeps=sweep,
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot = np.array([[c, s], [-s, c]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = rot.T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                v[:, idx] = v[:, idx] @ rot
        sweep += 1
        off = off_diagonal_norm(a)

    logger.debug("jacobi_converged", order=n, sweeps=sweep, off_norm=off)
    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    return eigenvalues[order], v[:, order]


def eigh(values: np.ndarray, method: Optional[str] = None) -> Tuple[np.ndarray, np.ndarray]:
    """Dispatch to Jacobi or LAPACK according to `settings.eigensolver`."""
    method = method or settings.eigensolver
    if method == "lapack":
        return np.linalg.eigh(values)
    return jacobi_eigh(values)


def eig_sym(matrix: SymMatrix, method: Optional[str] = None) -> List[EigenPair]:
    """Full orthonormal eigensystem as ascending (eigenvalue, unit vector) pairs."""
    w, vecs = eigh(matrix.values, method)
    return [EigenPair(float(w[i]), vecs[:, i].copy()) for i in range(matrix.order)]


def reconstruction_error(matrix: SymMatrix, pairs: List[EigenPair]) -> float:
    """||M - V diag(w) V^T||_inf."""
    vecs = np.column_stack([p.vector for p in pairs])
    w = np.array([p.value for p in pairs])
    diff = matrix.values - vecs @ np.diag(w) @ vecs.T
    return float(np.abs(diff).sum(axis=1).max())
