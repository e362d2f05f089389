"""Unit tests for exhaustive q_min minimization."""

import math

import pytest

from execution.models.errors import EmptyClassError, ParameterDomainError
from execution.models.status import Verdict
from extremal.canonical import canonical_form
from extremal.minimizer import (
    check_final,
    check_minpengraph,
    find_minimizer,
    minimize_over,
    minimizer_report,
    qmin_value,
)
from extremal.models import GraphFilter, MinimizerResult
from graph_core import build_U, complete, cycle, graph6_encode, path


def test_order_five_single_dominator():
    """Test that V_5^1(3) = U_5^2(3) minimizes q_min among gamma = 1 graphs."""
    result = find_minimizer(5, 1)

    assert result.expected == canonical_form(build_U(5, 2, 3)).decode("ascii")
    assert result.matches_expected
    assert result.runner_up_gap > 1e-9
    assert result.min_value == pytest.approx(qmin_value(build_U(5, 2, 3)), abs=1e-12)


def test_unrestricted_class_bounds():
    """Test 1 <= gamma <= (n+1)/3."""
    with pytest.raises(ParameterDomainError):
        find_minimizer(7, 3)
    with pytest.raises(ParameterDomainError):
        find_minimizer(7, 0)


def test_restricted_class_uses_family_params():
    """Test that an even girth is a domain error."""
    with pytest.raises(ParameterDomainError):
        find_minimizer(6, 2, odd_girth=4)


def test_empty_class_raises():
    """Test a class with no member."""
    with pytest.raises(EmptyClassError):
        minimize_over(4, GraphFilter(non_bipartite=True, odd_girth=5))


def test_single_member_class_has_no_runner_up():
    """Test that C_5 alone gives an infinite gap and a null margin."""
    result = minimize_over(5, GraphFilter(odd_girth=5), expected=cycle(5))

    assert result.class_size == 1
    assert math.isinf(result.runner_up_gap)
    report = minimizer_report("sample-check", result)
    assert report.verdict is Verdict.PASS
    assert report.margin is None
    assert "single-graph class: no runner-up" in report.notes


def test_mismatch_reports_argmin_and_expected():
    """Test the fail report lists every argmin member and the expected graph."""
    result = MinimizerResult(
        class_params={"n": 3},
        class_size=2,
        argmin=[graph6_encode(complete(3))],
        min_value=1.0,
        runner_up_gap=0.5,
        expected=graph6_encode(path(3)),
    )
    report = minimizer_report("sample-check", result)

    assert report.verdict is Verdict.FAIL
    assert report.margin == 0.5
    assert [w.label for w in report.witnesses] == ["argmin member", "expected minimizer"]


def test_final_corollary_order_six():
    """Test cor-final at n = 6, gamma = 2."""
    report = check_final(6, 2)

    assert report.check_id == "cor-final"
    assert report.verdict is Verdict.PASS
    assert report.witnesses[0].label == "unique minimizer"


def test_pendant_graph_minimizer():
    """Test that U_6^2(3) is the minimizer among unicyclic graphs with two pendants."""
    report = check_minpengraph(6, 2, 3)

    assert report.verdict is Verdict.PASS
    assert report.params == {"n": 6, "k": 2, "g": 3, "unicyclic": True}
