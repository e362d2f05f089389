"""Domination-number facts about the U family and small graphs, as reports."""

from typing import List, Optional

from domination.formula import gamma_g_formula
from domination.solver import domination_number
from execution.models.status import Verdict
from extremal.enumeration import enumerate_graphs
from extremal.families import closed_form_v3_k, feasible_gammas, gamma_profile, v_star_k
from extremal.models import GraphFilter, VerificationReport, Witness, min_or_none
from graph_core.constructors import build_U
from graph_core.structure import isolated_vertices
from observability.logger import get_logger

logger = get_logger(__name__)


def check_gamma_chain(n: int, g: int) -> VerificationReport:
    """
    gamma(U_n^k(g)) is non-increasing in k, starts at gamma_g, and takes
    every value in [ceil(g/3), gamma_g].
    """
    profile = gamma_profile(n, g)
    formula = gamma_g_formula(n, g)
    witnesses: List[Witness] = []
    if profile[0] != formula:
        witnesses.append(
            Witness.of(
                "gamma(U_n^1(g)) differs from gamma_g",
                build_U(n, 1, g),
                gamma=profile[0],
                formula=formula,
            )
        )
    for k in range(1, len(profile)):
        if profile[k] > profile[k - 1]:
            witnesses.append(
                Witness.of(
                    f"gamma rises from k={k} to k={k + 1}",
                    build_U(n, k + 1, g),
                    before=profile[k - 1],
                    after=profile[k],
                )
            )
    missing = [gamma for gamma in feasible_gammas(n, g) if gamma not in profile]
    for gamma in missing:
        witnesses.append(Witness.of(f"gamma={gamma} not realized by any U_n^k(g)", gamma=gamma))

    rows = [[k, gamma] for k, gamma in enumerate(profile, start=1)]
    return VerificationReport(
        check_id="gamma-chain",
        params={"n": n, "g": g},
        verdict=Verdict.FAIL if witnesses else Verdict.PASS,
        witnesses=witnesses,
        notes=[f"gamma profile over k: {list(profile)}"],
        csv_columns=["k", "gamma"],
        csv_rows=rows,
    )


def check_half_bound(n: int, allow_large: bool = False) -> VerificationReport:
    """gamma <= n/2 on every graph of order n without isolated vertices."""
    filters = GraphFilter(connected=False)
    slacks: List[float] = []
    witnesses: List[Witness] = []
    for graph in enumerate_graphs(n, filters, allow_large=allow_large):
        if isolated_vertices(graph):
            continue
        gamma = domination_number(graph).gamma
        slack = n / 2 - gamma
        slacks.append(slack)
        if slack < 0:
            witnesses.append(Witness.of("gamma above n/2", graph, gamma=gamma))
    return VerificationReport(
        check_id="bound-half",
        params={"n": n},
        verdict=Verdict.FAIL if witnesses else Verdict.PASS,
        margin=min_or_none(slacks),
        tolerance=0.0,
        witnesses=witnesses,
        notes=[f"{len(slacks)} isolated-vertex-free classes of order {n}"],
    )


def check_v_closed_form(n: int, gamma: Optional[int] = None) -> VerificationReport:
    """
    The star size of V_n^gamma(3) matches n - 3 gamma (n >= 3 gamma + 1) or
    1 (n in {3 gamma - 1, 3 gamma}); every feasible gamma when none is given.
    """
    gammas = [gamma] if gamma is not None else list(feasible_gammas(n, 3))
    witnesses: List[Witness] = []
    rows = []
    for value in gammas:
        solved = v_star_k(n, value, 3)
        predicted = closed_form_v3_k(n, value)
        rows.append([value, solved, predicted])
        if solved != predicted:
            witnesses.append(
                Witness.of(
                    f"V_{n}^{value}(3) star size",
                    build_U(n, solved, 3),
                    solved=solved,
                    predicted=predicted,
                )
            )
    if witnesses:
        logger.warning("closed_form_mismatch", n=n, gammas=gammas)
    return VerificationReport(
        check_id="v-closed-form",
        params={"n": n, "gamma": gamma},
        verdict=Verdict.FAIL if witnesses else Verdict.PASS,
        witnesses=witnesses,
        csv_columns=["gamma", "k_solved", "k_closed_form"],
        csv_rows=rows,
    )
