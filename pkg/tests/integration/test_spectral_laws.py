"""Randomized runs of the quadratic-form, eigen-equation and Rayleigh laws."""

import numpy as np

from config.tolerances import TOLERANCES
from graph_core.random_graphs import random_graph
from spectral import (
    SymMatrix,
    eig_sym,
    eigen_residual,
    q_min,
    q_spectrum,
    quadratic_form,
    rayleigh_check,
    reconstruction_error,
    signless_laplacian,
)

TRIALS = 1000


def _random_graph(rng):
    n = int(rng.integers(2, 11))
    return random_graph(n, float(rng.uniform(0.2, 0.8)), rng)


def test_quadratic_form_matches_matrix_product(rng):
    """Test the edge-sum form against x^T Q x on random graphs and vectors."""
    for _ in range(TRIALS):
        graph = _random_graph(rng)
        x = rng.normal(size=graph.n) * float(rng.uniform(0.1, 10.0))
        q = signless_laplacian(graph)

        expected = float(x @ q.values @ x)
        bound = TOLERANCES.quadratic_form * (1.0 + float(x @ x) * q.inf_norm())
        assert abs(quadratic_form(graph, x) - expected) <= bound


def test_first_eigenvector_satisfies_eigen_equation(rng):
    """Test the residual of (q_min, x) and positive semidefiniteness on random graphs."""
    for _ in range(TRIALS):
        graph = _random_graph(rng)
        result = q_min(graph)

        assert abs(np.linalg.norm(result.vector) - 1.0) <= TOLERANCES.unit_norm * 10
        assert result.residual <= TOLERANCES.residual
        assert eigen_residual(graph, result.vector, result.qmin) <= TOLERANCES.residual
        assert q_spectrum(graph).min() >= TOLERANCES.psd_floor


def test_rayleigh_bound_on_random_unit_vectors(rng):
    """Test that no unit vector gives a quadratic form below q_min."""
    for _ in range(TRIALS):
        graph = _random_graph(rng)
        x = rng.normal(size=graph.n)
        x /= np.linalg.norm(x)

        assert rayleigh_check(graph, x) >= q_min(graph).qmin - TOLERANCES.rayleigh_slack


def test_random_symmetric_eigensystem_is_orthonormal(rng):
    """Test V^T V = I and the reconstruction of random symmetric 8x8 matrices."""
    for _ in range(TRIALS):
        m = rng.normal(size=(8, 8))
        matrix = SymMatrix((m + m.T) / 2.0)
        pairs = eig_sym(matrix)
        vecs = np.column_stack([p.vector for p in pairs])

        gram_error = np.abs(vecs.T @ vecs - np.eye(8)).sum(axis=1).max()
        assert gram_error <= TOLERANCES.orthonormality
        assert reconstruction_error(matrix, pairs) <= TOLERANCES.reconstruction * (
            1.0 + matrix.inf_norm()
        )
