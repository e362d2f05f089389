"""Dense symmetric matrices and the signless Laplacian Q = D + A."""

from dataclasses import dataclass

import numpy as np

from execution.models.errors import ParameterDomainError
from graph_core.graph import Graph, iter_bits


@dataclass(frozen=True)
class SymMatrix:
    """Real symmetric matrix with finite entries (read-only copy)."""

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.values, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ParameterDomainError(
                f"expected a square matrix, got shape {arr.shape}",
                constraint="square",
            )
        if not np.all(np.isfinite(arr)):
            raise ParameterDomainError("matrix has non-finite entries", constraint="finite")
        if not np.array_equal(arr, arr.T):
            raise ParameterDomainError("matrix is not symmetric", constraint="symmetric")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def order(self) -> int:
        return int(self.values.shape[0])

    def entry(self, i: int, j: int) -> float:
        return float(self.values[i, j])

    def inf_norm(self) -> float:
        return float(np.abs(self.values).sum(axis=1).max()) if self.order else 0.0


def adjacency_array(graph: Graph) -> np.ndarray:
    a = np.zeros((graph.n, graph.n))
    for u in range(graph.n):
        for v in iter_bits(graph.adj[u]):
            a[u, v] = 1.0
    return a


def signless_laplacian(graph: Graph) -> SymMatrix:
    """Q(G) = D(G) + A(G)."""
    a = adjacency_array(graph)
    return SymMatrix(a + np.diag(a.sum(axis=1)))


__all__ = [
    "SymMatrix",
    "adjacency_array",
    "signless_laplacian",
]
