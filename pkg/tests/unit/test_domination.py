"""Unit tests for exact domination numbers and the gamma_g formula."""

import pytest

from domination import (
    ceil_third,
    dominates,
    domination_number,
    domination_number_bruteforce,
    gamma_g_formula,
    greedy_dominating_set,
)
from execution.models.errors import ParameterDomainError, SizeGuardError
from graph_core import build_U, complete, cycle, make_graph, path, star
from graph_core.random_graphs import random_graph


@pytest.mark.parametrize(
    "graph,gamma",
    [
        (star(4), 1),
        (complete(5), 1),
        (cycle(6), 2),
        (cycle(7), 3),
        (path(7), 3),
        (make_graph(3, []), 3),
        (make_graph(1, []), 1),
        (build_U(7, 1, 3), 2),
    ],
)
def test_known_domination_numbers(graph, gamma):
    """Test gamma on graphs with textbook values."""
    certificate = domination_number(graph)

    assert certificate.gamma == gamma
    assert len(certificate.witness) == gamma
    assert dominates(graph, certificate.witness)


def test_witness_is_deterministic():
    """Test that the first minimum set in branch order is returned."""
    assert domination_number(path(3)).sorted_witness() == [1]
    assert domination_number(star(4)).sorted_witness() == [0]


def test_agrees_with_bruteforce_on_random_graphs(rng):
    """Test the branch-and-bound against the subset oracle."""
    for _ in range(60):
        n = int(rng.integers(1, 12))
        graph = random_graph(n, float(rng.uniform(0.05, 0.6)), rng)
        fast = domination_number(graph)
        slow = domination_number_bruteforce(graph)
        assert fast.gamma == slow.gamma
        assert dominates(graph, slow.witness)


def test_greedy_cover_dominates_and_bounds(rng):
    """Test that the greedy set dominates and is never below gamma."""
    for _ in range(30):
        graph = random_graph(10, 0.3, rng)
        greedy = greedy_dominating_set(graph)
        assert dominates(graph, greedy)
        assert len(greedy) >= domination_number(graph).gamma


def test_dominates_checks_coverage(paw):
    """Test closed-neighbourhood coverage."""
    assert dominates(paw, [0])
    assert not dominates(paw, [3])
    assert dominates(paw, [1, 3])


def test_bruteforce_size_guard():
    """Test that the oracle refuses orders above its cap."""
    with pytest.raises(SizeGuardError):
        domination_number_bruteforce(path(21))


@pytest.mark.parametrize(
    "n,g,expected",
    [
        (10, 3, 3),
        (10, 5, 4),
        (7, 3, 2),
        (8, 5, 3),
        (9, 9 - 2, 3),
    ],
)
def test_gamma_g_formula(n, g, expected):
    """Test ceil((n-1)/3) when 3 | g and ceil(n/3) otherwise."""
    assert gamma_g_formula(n, g) == expected


@pytest.mark.parametrize("n,g", [(10, 4), (10, 10), (10, 1)])
def test_gamma_g_formula_domain(n, g):
    """Test that even or out-of-range girths are rejected."""
    with pytest.raises(ParameterDomainError):
        gamma_g_formula(n, g)


@pytest.mark.parametrize("n,g", [(7, 3), (10, 5), (11, 9), (13, 3)])
def test_gamma_g_formula_matches_solver(n, g):
    """Test the formula against gamma(U_n^1(g))."""
    assert domination_number(build_U(n, 1, g)).gamma == gamma_g_formula(n, g)


def test_ceil_third():
    """Test ceil(g/3) on cycle lengths."""
    assert [ceil_third(g) for g in (3, 5, 7, 9)] == [1, 2, 3, 3]
