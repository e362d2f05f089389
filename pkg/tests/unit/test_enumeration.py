"""Unit tests for canonical forms and exhaustive enumeration."""

import pytest

from execution.models.errors import SizeGuardError
from extremal.canonical import are_isomorphic, canonical_form, canonical_graph, refine_cells
from extremal.enumeration import enumerate_graphs, enumerate_labeled
from extremal.models import GraphFilter
from graph_core import build_U, complete, cycle, graph6_encode, make_graph, path, star


@pytest.mark.parametrize(
    "n,connected,count",
    [
        (1, True, 1),
        (3, True, 2),
        (4, True, 6),
        (5, True, 21),
        (6, True, 112),
        (4, False, 11),
        (5, False, 34),
    ],
)
def test_class_counts(n, connected, count):
    """Test the number of isomorphism classes against known sequences."""
    graphs = list(enumerate_graphs(n, GraphFilter(connected=connected)))

    assert len(graphs) == count


def test_non_bipartite_order_four(paw, diamond):
    """Test that paw, diamond and K_4 are the connected non-bipartite classes."""
    graphs = list(enumerate_graphs(4, GraphFilter(non_bipartite=True)))

    forms = {canonical_form(g) for g in graphs}
    assert forms == {canonical_form(paw), canonical_form(diamond), canonical_form(complete(4))}


def test_odd_girth_five_on_five_vertices():
    """Test that C_5 is the only graph of order 5 with odd girth 5."""
    graphs = list(enumerate_graphs(5, GraphFilter(odd_girth=5)))

    assert len(graphs) == 1
    assert are_isomorphic(graphs[0], cycle(5))


def test_unicyclic_pendant_filter():
    """Test that U_5^2(3) is among the unicyclic graphs with two pendants."""
    filters = GraphFilter(non_bipartite=True, unicyclic=True, pendant_count=2)
    forms = {canonical_form(g) for g in enumerate_graphs(5, filters)}

    assert canonical_form(build_U(5, 2, 3)) in forms


def test_gamma_filter(paw):
    """Test domination filtering on order 4."""
    forms = {canonical_form(g) for g in enumerate_graphs(4, GraphFilter(gamma=2))}

    assert forms == {canonical_form(path(4)), canonical_form(cycle(4))}
    assert canonical_form(paw) not in forms


def test_output_is_sorted_and_deterministic():
    """Test ascending canonical order across repeated runs."""
    first = [graph6_encode(g) for g in enumerate_graphs(5)]
    second = [graph6_encode(g) for g in enumerate_graphs(5)]

    assert first == second
    assert first == sorted(first)


def test_labeled_oracle_agrees_on_order_four():
    """Test dedup of all 64 labeled graphs against the class enumerator."""
    labeled = {canonical_form(g) for g in enumerate_labeled(4)}
    classes = {canonical_form(g) for g in enumerate_graphs(4, GraphFilter(connected=False))}

    assert len(list(enumerate_labeled(4))) == 64
    assert labeled == classes


def test_size_guards():
    """Test the default cap, the labeled cap and the empty order."""
    with pytest.raises(SizeGuardError):
        list(enumerate_graphs(8))
    with pytest.raises(SizeGuardError):
        list(enumerate_graphs(0))
    with pytest.raises(SizeGuardError):
        list(enumerate_labeled(6))


def test_canonical_form_is_relabeling_invariant(rng):
    """Test that random relabelings keep the canonical form."""
    graph = build_U(8, 2, 3)
    for _ in range(10):
        perm = [int(v) for v in rng.permutation(graph.n)]
        assert canonical_form(graph.relabel(perm)) == canonical_form(graph)


def test_canonical_graph_is_a_fixed_point():
    """Test that canonicalizing twice changes nothing."""
    graph = canonical_graph(star(4).with_edges([(1, 2)]))

    assert canonical_graph(graph) == graph


def test_non_isomorphic_graphs_with_equal_degrees():
    """Test C_6 against two disjoint triangles."""
    triangles = make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])

    assert not are_isomorphic(cycle(6), triangles)
    assert are_isomorphic(cycle(6), cycle(6).relabel([3, 1, 5, 0, 2, 4]))


def test_refinement_separates_degrees(paw):
    """Test that the paw splits into pendant, degree-2 and degree-3 cells."""
    assert refine_cells(paw) == [[3], [1, 2], [0]]
