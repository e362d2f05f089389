"""Quadratic form, eigenvector equation and Rayleigh bound on graphs."""

import math
from typing import Sequence

import numpy as np

from config.tolerances import TOLERANCES
from execution.models.errors import ParameterDomainError
from graph_core.graph import Graph, iter_bits


def _as_vector(graph: Graph, x: Sequence[float]) -> np.ndarray:
    vec = np.asarray(x, dtype=float)
    if vec.shape != (graph.n,):
        raise ParameterDomainError(
            f"vector has shape {vec.shape}, graph has {graph.n} vertices",
            constraint="dim(x) = n",
        )
    return vec


def quadratic_form(graph: Graph, x: Sequence[float]) -> float:
    """x^T Q x computed edge-wise as the sum of (x(u) + x(v))^2."""
    vec = _as_vector(graph, x)
    return float(sum((vec[u] + vec[v]) ** 2 for u, v in graph.edges()))


def eigen_residual(graph: Graph, x: Sequence[float], lam: float) -> float:
    """max_v |(lam - d(v)) x(v) - sum_{u ~ v} x(u)|."""
    vec = _as_vector(graph, x)
    worst = 0.0
    for v in range(graph.n):
        row = graph.adj[v]
        neighbour_sum = sum(vec[u] for u in iter_bits(row))
        d = bin(row).count("1")
        worst = max(worst, abs((lam - d) * vec[v] - neighbour_sum))
    return float(worst)


def rayleigh_check(graph: Graph, x: Sequence[float]) -> float:
    """
    x^T Q x for a unit vector x; q_min(G) never exceeds it.

    Raises:
        ParameterDomainError: x is not a unit vector
    """
    vec = _as_vector(graph, x)
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > TOLERANCES.unit_input:
        raise ParameterDomainError(
            f"Rayleigh bound needs a unit vector, got norm {norm:.12g}",
            constraint="||x||_2 = 1",
        )
    return quadratic_form(graph, vec)


def odd_cycle_qmin_oracle(n: int) -> float:
    """Closed form q_min(C_n) = 2 - 2 cos(pi / n) for odd n >= 3."""
    if n < 3 or n % 2 == 0:
        raise ParameterDomainError(
            f"odd-cycle oracle needs odd n >= 3, got {n}", constraint="n odd, n >= 3"
        )
    return 2.0 - 2.0 * math.cos(math.pi / n)
