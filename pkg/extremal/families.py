"""V_n^gamma(g): the U_n^k(g) with least k realizing a domination number."""

from functools import lru_cache
from typing import Tuple

from domination.formula import ceil_third, gamma_g_formula
from domination.solver import domination_number
from execution.models.errors import FamilyAssumptionError, ParameterDomainError
from graph_core.constructors import FamilyParams, build_U
from graph_core.graph import Graph
from observability.logger import get_logger

logger = get_logger(__name__)


@lru_cache(maxsize=1024)
def gamma_profile(n: int, g: int) -> Tuple[int, ...]:
    """gamma(U_n^k(g)) for k = 1 .. n-g (index k-1)."""
    FamilyParams(n=n, g=g, k=1)
    return tuple(domination_number(build_U(n, k, g)).gamma for k in range(1, n - g + 1))


def v_star_k(n: int, gamma: int, g: int) -> int:
    """Least k with gamma(U_n^k(g)) = gamma."""
    FamilyParams(n=n, g=g, gamma=gamma)
    profile = gamma_profile(n, g)
    for k, value in enumerate(profile, start=1):
        if value == gamma:
            return k
    logger.error("gamma_not_realized", n=n, g=g, gamma=gamma, profile=list(profile))
    raise FamilyAssumptionError(
        f"no U_{n}^k({g}) has domination number {gamma}",
        profile=list(profile),
        params={"n": n, "g": g, "gamma": gamma},
    )


def build_V(n: int, gamma: int, g: int) -> Graph:
    return build_U(n, v_star_k(n, gamma, g), g)


def closed_form_v3_k(n: int, gamma: int) -> int:
    """
    k of V_n^gamma(3) without solving: n - 3 gamma when n >= 3 gamma + 1,
    and 1 when n is 3 gamma - 1 or 3 gamma.
    """
    if n >= 3 * gamma + 1:
        return n - 3 * gamma
    if n in (3 * gamma - 1, 3 * gamma):
        return 1
    raise ParameterDomainError(
        f"closed form needs n >= 3*gamma - 1, got n={n}, gamma={gamma}",
        constraint="n >= 3*gamma - 1",
        params={"n": n, "gamma": gamma},
    )


def feasible_gammas(n: int, g: int) -> range:
    return range(ceil_third(g), gamma_g_formula(n, g) + 1)


def feasible_girths(n: int, gamma: int) -> list[int]:
    """Odd g < n with ceil(g/3) <= gamma <= gamma_g(n, g)."""
    return [
        g
        for g in range(3, n, 2)
        if ceil_third(g) <= gamma <= gamma_g_formula(n, g)
    ]
