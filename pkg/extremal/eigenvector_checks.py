"""
Structure of first Q-eigenvectors: sign pattern on U_n^k(g) and |x| growth
along tree branches.

Both checks read a sign-normalized eigenvector, so they are only meaningful
when q_min is simple; below the gap guard they report indeterminate.
"""

from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.tolerances import TOLERANCES
from execution.models.errors import HypothesisError, ParameterDomainError
from execution.models.status import Verdict
from extremal.models import VerificationReport, Witness, merge_reports, min_or_none
from graph_core.constructors import FamilyParams, build_U, u_cycle_labels
from graph_core.graph import Graph, iter_bits
from graph_core.random_graphs import random_with_pendant_trees
from graph_core.structure import is_bipartite, is_connected
from observability.logger import get_logger
from spectral.least import SpectralResult, q_min

logger = get_logger(__name__)

SIGN_CHECK_ID = "lemma-sign"
VALUE_CHECK_ID = "lemma-value"

NONZERO_BRANCH_NOTE = (
    "nonzero branch read as: some non-root branch vertex has |x(v)| > "
    f"{TOLERANCES.branch_nonzero:g}"
)


def _indeterminate(
    check_id: str, params: Dict, graph: Graph, result: SpectralResult
) -> VerificationReport:
    logger.info("gap_guard_indeterminate", check_id=check_id, gap=result.gap, **params)
    return VerificationReport(
        check_id=check_id,
        params=params,
        verdict=Verdict.INDETERMINATE,
        witnesses=[Witness.of("q_min not simple", graph, gap=result.gap)],
        notes=[f"spectral gap {result.gap:.3e} below guard {TOLERANCES.gap_guard:g}"],
    )


def _resolve_cycle_order(g: int, cycle_order: Optional[Sequence[int]]) -> List[int]:
    default = u_cycle_labels(g)
    if cycle_order is None:
        return default
    order = [int(v) for v in cycle_order]
    if len(order) != g or sorted(order) != sorted(default):
        raise ParameterDomainError(
            f"cycle order must list the {g} cycle labels exactly once, got {order}",
            constraint="cycle_order is a permutation of the cycle labels",
            params={"g": g, "cycle_order": order},
        )
    return order


def check_sign_structure(
    n: int, k: int, g: int, cycle_order: Optional[Sequence[int]] = None
) -> VerificationReport:
    """
    Sign pattern of the first Q-eigenvector of U_n^k(g).

    With v_1..v_g the cycle read from `cycle_order` (default: the builder's
    anticlockwise labeling) and h = (g-1)/2:
      symmetry  x(v_i) = x(v_{g-i}) for i = 1..h
      signs     x(v_h) x(v_{h+1}) > 0 and x(v) x(w) < 0 on every other edge
      chain     |x(v_g)| > |x(v_1)| > .. > |x(v_h)| > 0
    Each condition becomes a slack that must be nonnegative.
    """
    FamilyParams(n=n, g=g, k=k)
    labels = _resolve_cycle_order(g, cycle_order)
    params: Dict = {"n": n, "k": k, "g": g}
    if cycle_order is not None:
        params["cycle_order"] = labels

    graph = build_U(n, k, g)
    result = q_min(graph)
    if not result.is_simple:
        return _indeterminate(SIGN_CHECK_ID, params, graph, result)

    x = result.vector
    h = (g - 1) // 2
    v = [None] + labels  # v[i] is the label of v_i
    slacks: List[float] = []
    witnesses: List[Witness] = []

    for i in range(1, h + 1):
        diff = abs(x[v[i]] - x[v[g - i]])
        slack = TOLERANCES.symmetry - diff
        slacks.append(slack)
        if slack < 0:
            witnesses.append(
                Witness.of(f"x(v_{i}) != x(v_{g - i})", graph, difference=float(diff))
            )

    special = frozenset((v[h], v[h + 1]))
    for a, b in graph.edges():
        product = float(x[a] * x[b])
        if frozenset((a, b)) == special:
            slack = product - TOLERANCES.sign_product
            expected = "positive"
        else:
            slack = -product - TOLERANCES.sign_product
            expected = "negative"
        slacks.append(slack)
        if slack < 0:
            witnesses.append(
                Witness.of(f"edge {a}-{b} product not {expected}", graph, product=product)
            )

    chain = [v[g]] + [v[i] for i in range(1, h + 1)]
    for upper, lower in zip(chain, chain[1:]):
        slack = abs(x[upper]) - abs(x[lower]) - TOLERANCES.chain_margin
        slacks.append(slack)
        if slack < 0:
            witnesses.append(
                Witness.of(
                    f"|x({upper})| <= |x({lower})| on the cycle chain",
                    graph,
                    upper=float(abs(x[upper])),
                    lower=float(abs(x[lower])),
                )
            )
    tail = abs(x[chain[-1]]) - TOLERANCES.chain_floor
    slacks.append(tail)
    if tail < 0:
        witnesses.append(
            Witness.of(f"x({chain[-1]}) vanishes", graph, value=float(x[chain[-1]]))
        )

    margin = min(slacks)
    verdict = Verdict.PASS if margin >= 0 else Verdict.FAIL
    if verdict is Verdict.FAIL:
        logger.warning("sign_structure_failed", **params, margin=margin)
    return VerificationReport(
        check_id=SIGN_CHECK_ID,
        params=params,
        verdict=verdict,
        margin=float(margin),
        tolerance=0.0,
        witnesses=witnesses,
    )


def _two_core(graph: Graph) -> List[bool]:
    """Membership in the 2-core, found by repeatedly peeling degree <= 1 vertices."""
    deg = graph.degrees()
    alive = [True] * graph.n
    queue = deque(v for v in range(graph.n) if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        for w in iter_bits(graph.adj[v]):
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    return alive


def tree_branches(graph: Graph) -> List[Tuple[int, Dict[int, int]]]:
    """
    Maximal tree branches hanging off the 2-core.

    One entry per (root, child) pair: the root is a core vertex, the branch
    is the tree reached through that child. The dict maps each branch vertex
    to its parent towards the root, in BFS order.
    """
    core = _two_core(graph)
    branches: List[Tuple[int, Dict[int, int]]] = []
    for root in range(graph.n):
        if not core[root]:
            continue
        for child in iter_bits(graph.adj[root]):
            if core[child]:
                continue
            parent = {child: root}
            queue = deque([child])
            while queue:
                u = queue.popleft()
                for w in iter_bits(graph.adj[u]):
                    if w != parent[u] and not core[w] and w not in parent:
                        parent[w] = u
                        queue.append(w)
            branches.append((root, parent))
    return branches


def check_tree_branch_monotone(graph: Graph) -> VerificationReport:
    """
    |x| strictly grows away from the root along every nonzero tree branch.

    Branches whose non-root entries all stay within the nonzero threshold
    are skipped and counted in the notes.
    """
    if not is_connected(graph):
        raise HypothesisError("graph must be connected", params={"n": graph.n})
    if is_bipartite(graph) is not None:
        raise HypothesisError("graph must be non-bipartite", params={"n": graph.n})
    params: Dict = {"n": graph.n, "m": graph.edge_count}

    result = q_min(graph)
    if not result.is_simple:
        return _indeterminate(VALUE_CHECK_ID, params, graph, result)

    mags = np.abs(result.vector)
    slacks: List[float] = []
    witnesses: List[Witness] = []
    skipped = 0
    branches = tree_branches(graph)
    for root, parent in branches:
        if max(mags[w] for w in parent) <= TOLERANCES.branch_nonzero:
            skipped += 1
            continue
        for w, up in parent.items():
            slack = float(mags[w] - mags[up] - TOLERANCES.branch_margin)
            slacks.append(slack)
            if slack < 0:
                witnesses.append(
                    Witness.of(
                        f"|x({w})| <= |x({up})| in branch at {root}",
                        graph,
                        child=float(mags[w]),
                        parent=float(mags[up]),
                    )
                )

    notes = [NONZERO_BRANCH_NOTE, f"{len(branches)} branches, {skipped} skipped as zero"]
    margin = min_or_none(slacks)
    verdict = Verdict.FAIL if witnesses else Verdict.PASS
    if verdict is Verdict.FAIL:
        logger.warning("branch_monotonicity_failed", **params, margin=margin)
    return VerificationReport(
        check_id=VALUE_CHECK_ID,
        params=params,
        verdict=verdict,
        margin=margin,
        tolerance=0.0,
        witnesses=witnesses,
        notes=notes,
    )


def _valid_triples(max_n: int) -> List[Tuple[int, int, int]]:
    return [
        (n, k, g)
        for n in range(4, max_n + 1)
        for g in range(3, n, 2)
        for k in range(1, n - g + 1)
    ]


def check_sign_family(max_n: int = 16) -> VerificationReport:
    """Sign structure on every U_n^k(g) with n <= max_n."""
    reports = [check_sign_structure(n, k, g) for n, k, g in _valid_triples(max_n)]
    return merge_reports(SIGN_CHECK_ID, {"max_n": max_n}, reports, tolerance=0.0)


def check_value_family(max_n: int = 16) -> VerificationReport:
    """Branch monotonicity on every U_n^k(g) with n <= max_n."""
    reports = [
        check_tree_branch_monotone(build_U(n, k, g)) for n, k, g in _valid_triples(max_n)
    ]
    merged = merge_reports(VALUE_CHECK_ID, {"max_n": max_n}, reports, tolerance=0.0)
    merged.notes.append(NONZERO_BRANCH_NOTE)
    return merged


def check_value_random(
    trials: int = 300,
    max_n: int = 14,
    seed: int = 0,
    rng: Optional[np.random.Generator] = None,
) -> VerificationReport:
    """Branch monotonicity on random non-bipartite cores carrying pendant trees."""
    if max_n < 4:
        raise ParameterDomainError(
            f"random branch graphs need max_n >= 4, got {max_n}",
            constraint="max_n >= 4",
            params={"max_n": max_n},
        )
    rng = rng or np.random.default_rng(seed)
    reports = []
    for _ in range(trials):
        core = int(rng.integers(3, min(8, max_n)))
        trees = int(rng.integers(1, max_n - core + 1))
        graph = random_with_pendant_trees(core, trees, 0.4, rng)
        reports.append(check_tree_branch_monotone(graph))
    merged = merge_reports(
        VALUE_CHECK_ID,
        {"trials": trials, "max_n": max_n, "seed": seed},
        reports,
        tolerance=0.0,
    )
    merged.notes.append(NONZERO_BRANCH_NOTE)
    return merged


def check_value_suite(max_n: int = 16, trials: int = 300, seed: int = 0) -> VerificationReport:
    """The U family up to max_n followed by random pendant-tree graphs (n <= 14)."""
    reports = [
        check_value_family(max_n),
        check_value_random(trials=trials, max_n=min(max_n, 14), seed=seed),
    ]
    merged = merge_reports(
        VALUE_CHECK_ID,
        {"max_n": max_n, "trials": trials, "seed": seed},
        reports,
        tolerance=0.0,
    )
    merged.notes.append(NONZERO_BRANCH_NOTE)
    return merged
