# Extremal families, enumeration and verification checks
"""Extremal graph surface: families, enumeration, minimizers and checks"""

from .models import (
    GraphFilter,
    MinimizerResult,
    VerificationReport,
    Witness,
    merge_reports,
)
from .families import build_V, closed_form_v3_k, gamma_profile, v_star_k
from .canonical import are_isomorphic, canonical_form
from .enumeration import enumerate_graphs, enumerate_labeled
from .relocation import relocate_branch, verify_relocation, verify_relocation_random
from .eigenvector_checks import (
    check_sign_family,
    check_sign_structure,
    check_tree_branch_monotone,
    check_value_family,
    check_value_random,
    check_value_suite,
    tree_branches,
)
from .unispan import check_unispan_random, extract_spanning_unicyclic, verify_unispan
from .minimizer import (
    check_final,
    check_main_g,
    check_minpengraph,
    check_minuni,
    find_minimizer,
    minimize_over,
)
from .sweeps import (
    check_cycle_exclusion,
    check_uv,
    sweep_gamma,
    sweep_girth,
    sweep_girth_u,
    sweep_k,
)
from .domination_checks import check_gamma_chain, check_half_bound, check_v_closed_form
from .registry import CHECKS, CheckRegistry, CheckSpec

__all__ = [
    # Models
    "GraphFilter",
    "MinimizerResult",
    "VerificationReport",
    "Witness",
    "merge_reports",
    # Families
    "build_V",
    "closed_form_v3_k",
    "gamma_profile",
    "v_star_k",
    # Enumeration
    "are_isomorphic",
    "canonical_form",
    "enumerate_graphs",
    "enumerate_labeled",
    # Checks
    "relocate_branch",
    "verify_relocation",
    "verify_relocation_random",
    "check_sign_family",
    "check_sign_structure",
    "check_tree_branch_monotone",
    "check_value_family",
    "check_value_random",
    "check_value_suite",
    "tree_branches",
    "check_unispan_random",
    "extract_spanning_unicyclic",
    "verify_unispan",
    "check_final",
    "check_main_g",
    "check_minpengraph",
    "check_minuni",
    "find_minimizer",
    "minimize_over",
    "check_cycle_exclusion",
    "check_uv",
    "sweep_gamma",
    "sweep_girth",
    "sweep_girth_u",
    "sweep_k",
    "check_gamma_chain",
    "check_half_bound",
    "check_v_closed_form",
    # Registry
    "CHECKS",
    "CheckRegistry",
    "CheckSpec",
]
