"""Unit tests for spanning unicyclic extraction."""

import pytest

from domination import domination_number
from execution.models.errors import HypothesisError
from execution.models.status import Verdict
from extremal.unispan import check_unispan_random, extract_spanning_unicyclic, verify_unispan
from graph_core import build_U, complete, cycle, girth, is_unicyclic, make_graph, odd_girth, path
from graph_core.random_graphs import random_connected_non_bipartite


def assert_valid_extraction(graph, result):
    assert result.n == graph.n
    assert all(graph.has_edge(u, v) for u, v in result.edges())
    assert is_unicyclic(result)
    assert odd_girth(result) == girth(result)
    assert domination_number(result).gamma == domination_number(graph).gamma


def test_unicyclic_input_is_returned_unchanged(paw):
    """Test that a graph with n edges is its own answer."""
    assert extract_spanning_unicyclic(paw) == paw


def test_single_dominator_gives_star_plus_edge():
    """Test K_4: star from vertex 0 and the first edge avoiding it."""
    result = extract_spanning_unicyclic(complete(4))

    assert result.edges() == [(0, 1), (0, 2), (0, 3), (1, 2)]
    assert girth(result) == 3


def test_diamond(diamond):
    """Test a gamma = 1 graph that is not complete."""
    result = extract_spanning_unicyclic(diamond)

    assert_valid_extraction(diamond, result)
    assert domination_number(result).gamma == 1


@pytest.mark.parametrize(
    "graph",
    [
        build_U(8, 2, 5).with_edges([(1, 3)]),
        cycle(7).with_edges([(0, 2), (0, 4)]),
        build_U(9, 1, 3).with_edges([(4, 6), (0, 4)]),
        make_graph(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3), (1, 5)]),
    ],
)
def test_extraction_invariants(graph):
    """Test hand-built graphs with gamma >= 2."""
    assert_valid_extraction(graph, extract_spanning_unicyclic(graph))


def test_random_graphs_keep_gamma(rng):
    """Test extraction on seeded random connected non-bipartite graphs."""
    for _ in range(40):
        graph = random_connected_non_bipartite(int(rng.integers(4, 12)), 0.3, rng)
        assert_valid_extraction(graph, extract_spanning_unicyclic(graph))


@pytest.mark.parametrize("graph", [cycle(6), path(4), make_graph(5, [(0, 1), (1, 2), (0, 2)])])
def test_hypotheses(graph):
    """Test that bipartite or disconnected input is refused."""
    with pytest.raises(HypothesisError):
        extract_spanning_unicyclic(graph)


def test_report_form(paw):
    """Test the single-graph report."""
    report = verify_unispan(paw)

    assert report.verdict is Verdict.PASS
    assert report.witnesses[0].values["girth"] == 3


def test_random_run():
    """Test a short seeded randomized run."""
    report = check_unispan_random(trials=60, max_n=11, seed=5)

    assert report.verdict is Verdict.PASS
    assert report.notes[0].startswith("60 sub-checks: 60 pass")
