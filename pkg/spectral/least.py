"""Least Q-eigenvalue with certificates."""

import math
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from config.tolerances import TOLERANCES
from graph_core.graph import Graph
from spectral.jacobi import eigh
from spectral.matrix import signless_laplacian


@dataclass(frozen=True)
class SpectralResult:
    """
    q_min(G) with a unit first Q-eigenvector.

    Attributes:
        qmin: least eigenvalue of Q(G)
        vector: unit eigenvector, sign-normalized
        residual: max |Q x - qmin x|
        gap: q_{n-1}(G) - q_n(G); infinite for a single vertex
    """

    qmin: float
    vector: np.ndarray
    residual: float
    gap: float

    @property
    def is_simple(self) -> bool:
        """True when the first Q-eigenvector is numerically unique up to sign."""
        return self.gap >= TOLERANCES.gap_guard

    def to_dict(self) -> Dict[str, Any]:
        return {
            "qmin": self.qmin,
            "residual": self.residual,
            "gap": self.gap if math.isfinite(self.gap) else None,
            "vector": [float(x) for x in self.vector],
        }


def normalize_sign(vector: np.ndarray) -> np.ndarray:
    """Make the largest-magnitude entry positive (ties: lowest index)."""
    out = np.array(vector, dtype=float)
    if out.size == 0:
        return out
    mags = np.abs(out)
    peak = float(mags.max())
    lead = int(np.flatnonzero(mags >= peak - TOLERANCES.sign_tie)[0])
    if out[lead] < 0:
        out = -out
    return out


def q_spectrum(graph: Graph, method: Optional[str] = None) -> np.ndarray:
    """All Q-eigenvalues in ascending order."""
    w, _ = eigh(signless_laplacian(graph).values, method)
    return w


def q_min(graph: Graph, method: Optional[str] = None) -> SpectralResult:
    q = signless_laplacian(graph).values
    w, vecs = eigh(q, method)
    x = vecs[:, 0]
    x = normalize_sign(x / np.linalg.norm(x))
    qmin = float(w[0])
    residual = float(np.abs(q @ x - qmin * x).max())
    gap = float(w[1] - w[0]) if graph.n > 1 else math.inf
    if abs(gap) < TOLERANCES.gap_zero:
        gap = 0.0
    x.setflags(write=False)
    return SpectralResult(qmin=qmin, vector=x, residual=residual, gap=gap)
