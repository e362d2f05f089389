"""Unit tests for the U/V families and monotonicity sweeps."""

import pytest

from execution.models.errors import FamilyAssumptionError, ParameterDomainError
from execution.models.status import Verdict
from extremal.domination_checks import check_gamma_chain, check_half_bound, check_v_closed_form
from extremal.families import (
    build_V,
    closed_form_v3_k,
    feasible_gammas,
    feasible_girths,
    gamma_profile,
    v_star_k,
)
from extremal.sweeps import (
    SWEEPS,
    check_cycle_exclusion,
    check_uv,
    sweep_gamma,
    sweep_girth,
    sweep_girth_u,
    sweep_k,
)
from graph_core import build_U


def test_gamma_profile_of_small_U():
    """Test gamma(U_5^k(3)) for k = 1, 2."""
    assert gamma_profile(5, 3) == (2, 1)
    assert v_star_k(5, 1, 3) == 2
    assert build_V(5, 1, 3) == build_U(5, 2, 3)


def test_V_uses_the_least_star_size():
    """Test V_12^2(3) = U_12^6(3)."""
    assert v_star_k(12, 2, 3) == 6
    assert build_V(12, 2, 3) == build_U(12, 6, 3)


@pytest.mark.parametrize(
    "n,gamma,k",
    [(12, 2, 6), (10, 3, 1), (9, 3, 1), (8, 3, 1), (20, 4, 8)],
)
def test_closed_form_star_size(n, gamma, k):
    """Test n - 3 gamma above 3 gamma and 1 near it."""
    assert closed_form_v3_k(n, gamma) == k


def test_closed_form_domain():
    """Test that n below 3 gamma - 1 is rejected."""
    with pytest.raises(ParameterDomainError):
        closed_form_v3_k(7, 3)


def test_feasible_ranges():
    """Test the feasible gamma and girth ranges."""
    assert list(feasible_gammas(20, 3)) == [1, 2, 3, 4, 5, 6, 7]
    assert feasible_girths(21, 3) == [3, 5, 7, 9]


def test_unrealized_gamma_raises_family_error(monkeypatch):
    """Test that a profile without the requested value carries the profile."""
    import extremal.families as families

    monkeypatch.setattr(families, "gamma_profile", lambda n, g: (3, 3, 1))
    with pytest.raises(FamilyAssumptionError) as excinfo:
        families.v_star_k(10, 2, 3)

    assert excinfo.value.profile == [3, 3, 1]


def test_sweep_k():
    """Test q_min(U_20^k(3)) increasing over k = 1..17."""
    report = sweep_k(20, 3)

    assert report.verdict is Verdict.PASS
    assert report.csv_columns == ["k", "qmin", "margin"]
    assert [row[0] for row in report.csv_rows] == list(range(1, 18))
    assert report.csv_rows[0][2] is None
    assert all(row[2] > 0 for row in report.csv_rows[1:])


def test_sweep_gamma():
    """Test q_min(V_20^gamma(3)) decreasing over gamma = 1..7."""
    report = sweep_gamma(20, 3)

    assert report.verdict is Verdict.PASS
    assert [row[0] for row in report.csv_rows] == [1, 2, 3, 4, 5, 6, 7]
    qmins = [row[1] for row in report.csv_rows]
    assert qmins == sorted(qmins, reverse=True)


def test_sweep_girth():
    """Test q_min(V_21^3(g)) increasing over g = 3, 5, 7, 9."""
    report = sweep_girth(21, 3)

    assert report.verdict is Verdict.PASS
    assert [row[0] for row in report.csv_rows] == [3, 5, 7, 9]


def test_sweep_girth_without_feasible_girth():
    """Test an empty girth range."""
    with pytest.raises(ParameterDomainError):
        sweep_girth(5, 3)


def test_sweep_girth_u():
    """Test q_min(U_15^1(g)) increasing in g."""
    report = sweep_girth_u(15, 1)

    assert report.verdict is Verdict.PASS
    assert [row[0] for row in report.csv_rows] == [3, 5, 7, 9, 11, 13]


def test_u_above_v():
    """Test that every U other than its V sits strictly above it."""
    report = check_uv(20, 3)

    assert report.verdict is Verdict.PASS
    assert report.margin > 0


def test_sweep_table_covers_every_kind():
    """Test the sweep dispatch table."""
    assert set(SWEEPS) == {"k", "gamma", "girth", "girth-u"}
    runner, second = SWEEPS["girth"]
    assert runner is sweep_girth and second == "gamma"


@pytest.mark.parametrize("n", range(5, 16, 2))
def test_cycle_exclusion(n):
    """Test q_min(C_n) > q_min(U_n^1(n-2))."""
    report = check_cycle_exclusion(n)

    assert report.verdict is Verdict.PASS
    assert report.margin > 0


def test_cycle_exclusion_needs_odd_order():
    """Test that even n is rejected."""
    with pytest.raises(ParameterDomainError):
        check_cycle_exclusion(8)


@pytest.mark.parametrize("n,g", [(20, 3), (14, 5), (13, 7)])
def test_gamma_chain(n, g):
    """Test gamma non-increasing in k and covering every feasible value."""
    report = check_gamma_chain(n, g)

    assert report.verdict is Verdict.PASS
    assert [row[0] for row in report.csv_rows] == list(range(1, n - g + 1))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_half_bound(n):
    """Test gamma <= n/2 over isolated-vertex-free graphs."""
    report = check_half_bound(n)

    assert report.verdict is Verdict.PASS
    assert report.margin >= 0


@pytest.mark.parametrize("n", [8, 10, 13])
def test_v_closed_form(n):
    """Test the solved star size against the closed form for every gamma."""
    report = check_v_closed_form(n)

    assert report.verdict is Verdict.PASS
    assert all(row[1] == row[2] for row in report.csv_rows)
