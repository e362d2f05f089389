"""
Monotonicity sweeps of q_min along the U and V families.

Every sweep returns one report whose CSV payload has a row per swept value
(swept parameter, q_min, step margin); the first row has no margin. A step
margin is the change in q_min in the expected direction and must reach the
sweep tolerance.
"""

from typing import Callable, Dict, List, Optional, Sequence, Tuple

from config.tolerances import TOLERANCES
from domination.solver import domination_number
from execution.models.errors import ParameterDomainError
from execution.models.status import Verdict
from extremal.families import build_V, feasible_gammas, feasible_girths, v_star_k
from extremal.minimizer import qmin_value
from extremal.models import VerificationReport, Witness, min_or_none
from graph_core.constructors import FamilyParams, build_U, cycle
from graph_core.graph import Graph
from observability.logger import get_logger

logger = get_logger(__name__)

Profile = List[Tuple[int, float, Graph]]


def _monotone_report(
    check_id: str,
    params: Dict,
    column: str,
    profile: Profile,
    increasing: bool,
    extra_slacks: Sequence[Tuple[float, Witness]] = (),
) -> VerificationReport:
    rows: List[List] = []
    slacks: List[float] = []
    witnesses: List[Witness] = []
    previous: Optional[Tuple[int, float, Graph]] = None
    for value, qmin, graph in profile:
        step = None
        if previous is not None:
            step = qmin - previous[1] if increasing else previous[1] - qmin
            slacks.append(step)
            if step < TOLERANCES.sweep_margin:
                before, before_q, before_graph = previous
                witnesses.append(Witness.of(f"{column}={before}", before_graph, qmin=before_q))
                witnesses.append(Witness.of(f"{column}={value}", graph, qmin=qmin, step=step))
        rows.append([value, qmin, step])
        previous = (value, qmin, graph)

    for slack, witness in extra_slacks:
        slacks.append(slack)
        if slack < TOLERANCES.sweep_margin:
            witnesses.append(witness)

    verdict = Verdict.FAIL if witnesses else Verdict.PASS
    if verdict is Verdict.FAIL:
        logger.warning("sweep_not_monotone", check_id=check_id, **params)
    direction = "increasing" if increasing else "decreasing"
    return VerificationReport(
        check_id=check_id,
        params=params,
        verdict=verdict,
        margin=min_or_none(slacks),
        tolerance=TOLERANCES.sweep_margin,
        witnesses=witnesses,
        notes=[f"q_min strictly {direction} in {column} over {len(profile)} values"],
        csv_columns=[column, "qmin", "margin"],
        csv_rows=rows,
    )


def _k_profile(n: int, g: int) -> List[Tuple[int, float, Graph, int]]:
    FamilyParams(n=n, g=g, k=1)
    profile = []
    for k in range(1, n - g + 1):
        graph = build_U(n, k, g)
        profile.append((k, qmin_value(graph), graph, domination_number(graph).gamma))
    return profile


def _uv_slacks(n: int, g: int, profile) -> List[Tuple[float, Witness]]:
    """q_min(U_n^k(g)) - q_min(V_n^gamma(g)) for every U that is not its V."""
    by_k = {k: qmin for k, qmin, _, _ in profile}
    slacks = []
    for k, qmin, graph, gamma in profile:
        k_star = v_star_k(n, gamma, g)
        if k_star == k:
            continue
        slack = qmin - by_k[k_star]
        slacks.append(
            (
                slack,
                Witness.of(
                    f"U_{n}^{k}({g}) not above V_{n}^{gamma}({g}) = U_{n}^{k_star}({g})",
                    graph,
                    qmin=qmin,
                    v_qmin=by_k[k_star],
                ),
            )
        )
    return slacks


def sweep_k(n: int, g: int) -> VerificationReport:
    """q_min(U_n^k(g)) strictly increasing in k, plus U above its V."""
    profile = _k_profile(n, g)
    report = _monotone_report(
        "lemma-minpen-k",
        {"n": n, "g": g},
        "k",
        [(k, qmin, graph) for k, qmin, graph, _ in profile],
        increasing=True,
        extra_slacks=_uv_slacks(n, g, profile),
    )
    report.notes.append("includes q_min(U_n^k(g)) > q_min(V_n^gamma(g)) for every U != V")
    return report


def check_uv(n: int, g: int) -> VerificationReport:
    """U_n^k(g) with gamma(U) = gamma lies strictly above V_n^gamma(g) unless equal."""
    profile = _k_profile(n, g)
    slacks = _uv_slacks(n, g, profile)
    witnesses = [w for s, w in slacks if s < TOLERANCES.sweep_margin]
    return VerificationReport(
        check_id="cor-uv",
        params={"n": n, "g": g},
        verdict=Verdict.FAIL if witnesses else Verdict.PASS,
        margin=min_or_none([s for s, _ in slacks]),
        tolerance=TOLERANCES.sweep_margin,
        witnesses=witnesses,
        notes=[f"{len(slacks)} of {len(profile)} members differ from their V"],
    )


def _v_profile(n: int, pairs: Sequence[Tuple[int, int, int]]) -> Profile:
    """(swept value, q_min, graph) for V_n^gamma(g) at each (value, gamma, g)."""
    profile = []
    for value, gamma, g in pairs:
        graph = build_V(n, gamma, g)
        profile.append((value, qmin_value(graph), graph))
    return profile


def sweep_gamma(n: int, g: int) -> VerificationReport:
    """q_min(V_n^gamma(g)) strictly decreasing in gamma."""
    gammas = feasible_gammas(n, g)
    profile = _v_profile(n, [(gamma, gamma, g) for gamma in gammas])
    return _monotone_report(
        "cor-decr-gamma", {"n": n, "g": g}, "gamma", profile, increasing=False
    )


def sweep_girth(n: int, gamma: int) -> VerificationReport:
    """q_min(V_n^gamma(g)) strictly increasing in odd g."""
    girths = feasible_girths(n, gamma)
    if not girths:
        raise ParameterDomainError(
            f"no odd g < {n} with ceil(g/3) <= {gamma} <= gamma_g",
            constraint="ceil(g/3) <= gamma <= gamma_g(n, g) for some odd g < n",
            params={"n": n, "gamma": gamma},
        )
    profile = _v_profile(n, [(g, gamma, g) for g in girths])
    return _monotone_report(
        "cor-decr-girth", {"n": n, "gamma": gamma}, "g", profile, increasing=True
    )


def sweep_girth_u(n: int, k: int) -> VerificationReport:
    """q_min(U_n^k(g)) strictly increasing in odd g for a fixed star size."""
    girths = [g for g in range(3, n, 2) if n + 1 - g - k >= 1]
    if k < 1 or not girths:
        raise ParameterDomainError(
            f"no odd girth fits n={n}, k={k}",
            constraint="k >= 1 and n - k >= 3",
            params={"n": n, "k": k},
        )
    profile = []
    for g in girths:
        graph = build_U(n, k, g)
        profile.append((g, qmin_value(graph), graph))
    return _monotone_report("lemma-minpen-g", {"n": n, "k": k}, "g", profile, increasing=True)


SWEEPS: Dict[str, Tuple[Callable[[int, int], VerificationReport], str]] = {
    "k": (sweep_k, "g"),
    "gamma": (sweep_gamma, "g"),
    "girth": (sweep_girth, "gamma"),
    "girth-u": (sweep_girth_u, "k"),
}


def check_cycle_exclusion(n: int) -> VerificationReport:
    """q_min(C_n) > q_min(U_n^1(n-2)) for odd n."""
    if n % 2 == 0 or n < 5:
        raise ParameterDomainError(
            f"cycle exclusion needs odd n >= 5, got {n}",
            constraint="n odd, n >= 5",
            params={"n": n},
        )
    ring = cycle(n)
    unicyclic = build_U(n, 1, n - 2)
    ring_q, uni_q = qmin_value(ring), qmin_value(unicyclic)
    margin = ring_q - uni_q
    passed = margin >= TOLERANCES.sweep_margin
    witnesses = []
    if not passed:
        witnesses = [
            Witness.of("C_n", ring, qmin=ring_q),
            Witness.of("U_n^1(n-2)", unicyclic, qmin=uni_q),
        ]
    return VerificationReport(
        check_id="cor-cycle-exclusion",
        params={"n": n},
        verdict=Verdict.PASS if passed else Verdict.FAIL,
        margin=margin,
        tolerance=TOLERANCES.sweep_margin,
        witnesses=witnesses,
        csv_columns=["graph", "qmin"],
        csv_rows=[["C_n", ring_q], ["U_n^1(n-2)", uni_q]],
    )
