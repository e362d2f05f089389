"""Unit tests for eigenvector sign structure and branch monotonicity."""

import pytest

from execution.models.errors import HypothesisError, ParameterDomainError
from execution.models.status import Verdict
from extremal.eigenvector_checks import (
    NONZERO_BRANCH_NOTE,
    check_sign_family,
    check_sign_structure,
    check_tree_branch_monotone,
    check_value_random,
    tree_branches,
)
from graph_core import build_U, cycle, make_graph, path


@pytest.mark.parametrize("n,k,g", [(9, 2, 3), (12, 3, 5), (10, 1, 7)])
def test_sign_structure_on_U(n, k, g):
    """Test symmetry, edge signs and the cycle chain on single members."""
    report = check_sign_structure(n, k, g)

    assert report.verdict is Verdict.PASS
    assert report.margin >= 0
    assert report.params == {"n": n, "k": k, "g": g}


def test_wrong_cycle_order_fails():
    """Test that reading the cycle from the attachment vertex breaks the pattern."""
    report = check_sign_structure(9, 2, 3, cycle_order=[0, 1, 2])

    assert report.verdict is Verdict.FAIL
    assert report.witnesses
    assert report.params["cycle_order"] == [0, 1, 2]


def test_cycle_order_must_be_a_permutation():
    """Test that a short or foreign order is rejected."""
    with pytest.raises(ParameterDomainError):
        check_sign_structure(9, 2, 3, cycle_order=[0, 1])
    with pytest.raises(ParameterDomainError):
        check_sign_structure(9, 2, 3, cycle_order=[0, 1, 5])


def test_sign_family_small_orders():
    """Test every U_n^k(g) up to order 9."""
    report = check_sign_family(max_n=9)

    assert report.verdict is not Verdict.FAIL
    assert report.check_id == "lemma-sign"


def test_tree_branches_of_U():
    """Test that U_7^1(3) has one branch rooted at label 0."""
    assert tree_branches(build_U(7, 1, 3)) == [(0, {3: 0, 4: 3, 5: 4, 6: 5})]


def test_tree_branches_split_per_child():
    """Test one entry per (root, child) pair."""
    graph = make_graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (4, 5)])

    assert tree_branches(graph) == [(0, {3: 0}), (0, {4: 0, 5: 4})]


@pytest.mark.parametrize("n,k,g", [(12, 3, 5), (9, 1, 3), (8, 4, 3)])
def test_branch_values_grow_away_from_the_root(n, k, g):
    """Test |x| monotonicity on U_n^k(g) branches."""
    report = check_tree_branch_monotone(build_U(n, k, g))

    assert report.verdict is Verdict.PASS
    assert NONZERO_BRANCH_NOTE in report.notes


def test_cycle_without_branches_passes_vacuously():
    """Test that a bare odd cycle has nothing to compare."""
    report = check_tree_branch_monotone(cycle(5))

    assert report.verdict is Verdict.PASS
    assert report.margin is None
    assert "0 branches, 0 skipped as zero" in report.notes


@pytest.mark.parametrize("graph", [path(5), cycle(6), make_graph(4, [(0, 1), (1, 2), (0, 2)])])
def test_branch_check_hypotheses(graph):
    """Test that bipartite or disconnected input is refused."""
    with pytest.raises(HypothesisError):
        check_tree_branch_monotone(graph)


def test_random_branch_run():
    """Test a short seeded run on pendant-tree graphs."""
    report = check_value_random(trials=25, max_n=10, seed=3)

    assert report.verdict is not Verdict.FAIL
    assert report.params == {"trials": 25, "max_n": 10, "seed": 3}


def test_random_branch_run_needs_room():
    """Test the lower bound on max_n."""
    with pytest.raises(ParameterDomainError):
        check_value_random(trials=1, max_n=3)
