"""Unit tests for branch relocation and the relocation inequality."""

import pytest

from execution.models.errors import GraphError, HypothesisError
from execution.models.status import Verdict
from extremal.relocation import relocate_branch, verify_relocation, verify_relocation_random
from graph_core import coalesce, complete, cycle, make_graph, path, star
from spectral import q_min


@pytest.fixture
def pentagon_with_tail():
    """C_5 with the path 0-5-6 hanging at vertex 0."""
    return coalesce(cycle(5), 0, path(3), 0)


def test_relocate_moves_every_attachment_edge(pentagon_with_tail):
    """Test that the branch edges to the root move to the target."""
    moved = relocate_branch(pentagon_with_tail, 0, 2, [5, 6])

    assert moved.has_edge(2, 5)
    assert not moved.has_edge(0, 5)
    assert moved.has_edge(5, 6)
    assert moved.edge_count == pentagon_with_tail.edge_count


def test_relocating_back_restores_the_graph(pentagon_with_tail):
    """Test that relocation is undone by the reverse move."""
    there = relocate_branch(pentagon_with_tail, 0, 2, [5, 6])

    assert relocate_branch(there, 2, 0, [5, 6]) == pentagon_with_tail
    assert relocate_branch(pentagon_with_tail, 0, 0, [5, 6]) == pentagon_with_tail


@pytest.mark.parametrize(
    "v2,v1,branch",
    [
        (0, 2, []),
        (0, 2, [0, 5]),
        (0, 5, [5, 6]),
        (0, 2, [1, 5, 6]),
        (1, 2, [5, 6]),
        (0, 2, [6]),
    ],
)
def test_relocate_rejects_bad_branches(pentagon_with_tail, v2, v1, branch):
    """Test empty, self-containing, target-containing, leaking and detached branches."""
    with pytest.raises(GraphError):
        relocate_branch(pentagon_with_tail, v2, v1, branch)


def test_relocate_rejects_disconnected_branch():
    """Test that a branch must induce a connected subgraph."""
    graph = make_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)])

    with pytest.raises(GraphError):
        relocate_branch(graph, 0, 1, [3, 4])


def test_identity_relocation_passes_with_equality_diagnostics():
    """Test v1 = v2: the two graphs coincide and the diagnostics are reported."""
    report = verify_relocation(complete(3), 0, 0, path(2), 0)

    assert report.verdict is Verdict.PASS
    assert report.margin == pytest.approx(0.0, abs=1e-12)
    assert report.witnesses[0].label == "equality diagnostics"


def test_verdict_follows_the_hypothesis(paw):
    """Test every ordered root pair on the paw with a pendant edge as G2."""
    g2 = path(2)
    for v1 in range(paw.n):
        for v2 in range(paw.n):
            graph = coalesce(paw, v2, g2, 0)
            x = q_min(graph).vector
            report = verify_relocation(paw, v1, v2, g2, 0)
            if abs(x[v1]) < abs(x[v2]) - 1e-9:
                assert report.verdict is Verdict.INDETERMINATE
                assert report.witnesses
            elif abs(x[v1]) > abs(x[v2]) + 1e-9:
                assert report.verdict is Verdict.PASS


@pytest.mark.parametrize(
    "g1,g2",
    [
        (make_graph(3, [(0, 1)]), path(2)),
        (complete(3), complete(3)),
        (make_graph(1, []), path(2)),
    ],
)
def test_hypothesis_errors(g1, g2):
    """Test disconnected or trivial G1 and non-bipartite G2."""
    v2 = 1 if g1.n > 1 else 0
    with pytest.raises(HypothesisError):
        verify_relocation(g1, 0, v2, g2, 0)


def test_relocation_toward_the_larger_entry_never_raises_qmin():
    """Test a star branch moved between the two ends of a pendant path."""
    g1 = coalesce(cycle(3), 0, path(3), 0)
    g2 = star(2)
    for v1, v2 in ((4, 0), (0, 4)):
        report = verify_relocation(g1, v1, v2, g2, 0)
        assert report.verdict in (Verdict.PASS, Verdict.INDETERMINATE)


def test_random_relocation_run():
    """Test a short seeded randomized run."""
    report = verify_relocation_random(trials=40, seed=7)

    assert report.verdict is Verdict.PASS
    assert report.params == {"trials": 40, "seed": 7}
    assert report.notes[-1].endswith("hypothesis unmet in both orientations")
