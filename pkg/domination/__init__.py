"""Exact domination numbers and the gamma_g formula."""

from domination.formula import ceil_third, gamma_g_formula
from domination.solver import (
    BRUTEFORCE_MAX_ORDER,
    DominationCertificate,
    dominates,
    domination_number,
    domination_number_bruteforce,
    greedy_dominating_set,
)

__all__ = [
    "ceil_third",
    "gamma_g_formula",
    "BRUTEFORCE_MAX_ORDER",
    "DominationCertificate",
    "dominates",
    "domination_number",
    "domination_number_bruteforce",
    "greedy_dominating_set",
]
