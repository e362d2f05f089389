"""Branch relocation and the relocation inequality for bipartite branches."""

from typing import Iterable, List, Optional

import numpy as np

from config.tolerances import TOLERANCES
from execution.models.errors import GraphError, HypothesisError
from execution.models.status import Verdict
from extremal.models import VerificationReport, Witness, merge_reports
from graph_core.constructors import coalesce, coalesce_mapping
from graph_core.graph import Graph, iter_bits, mask_of
from graph_core.random_graphs import (
    random_connected_bipartite,
    random_connected_non_bipartite,
)
from graph_core.structure import components, is_bipartite, is_connected
from observability.logger import get_logger
from spectral.least import q_min

logger = get_logger(__name__)

CHECK_ID = "lemma-relocate"


def relocate_branch(graph: Graph, v2: int, v1: int, branch: Iterable[int]) -> Graph:
    """
    Move the branch hanging at v2 so that it hangs at v1.

    `branch` lists the branch vertices other than its root v2; it must induce
    a connected subgraph whose only edges to the rest of the graph go to v2.
    """
    graph.check_vertex(v1)
    graph.check_vertex(v2)
    members = sorted(set(branch))
    if not members:
        raise GraphError("branch must contain at least one vertex besides the root")
    for b in members:
        graph.check_vertex(b)
    inside = mask_of(members)
    if inside >> v2 & 1:
        raise GraphError(f"root {v2} cannot be part of its own branch", params={"v2": v2})
    if inside >> v1 & 1:
        raise GraphError(f"target {v1} lies inside the branch", params={"v1": v1})

    allowed = inside | (1 << v2)
    for b in members:
        if graph.adj[b] & ~allowed:
            raise GraphError(
                f"branch vertex {b} has edges outside the branch and its root",
                params={"vertex": b},
            )
    attached = [b for b in members if graph.has_edge(v2, b)]
    if not attached:
        raise GraphError("branch is not attached to its root", params={"v2": v2})
    sub = Graph(
        graph.n,
        tuple(row & inside if (inside >> v & 1) else 0 for v, row in enumerate(graph.adj)),
    )
    branch_components = [c for c in components(sub) if inside >> c[0] & 1]
    if len(branch_components) != 1:
        raise GraphError("branch does not induce a connected subgraph")

    if v1 == v2:
        return graph
    moved = graph.without_edges((v2, b) for b in attached)
    return moved.with_edges((v1, b) for b in attached)


def _require_inputs(g1: Graph, v1: int, v2: int, g2: Graph, u: int) -> None:
    g1.check_vertex(v1)
    g1.check_vertex(v2)
    g2.check_vertex(u)
    if g1.n < 2 or not is_connected(g1):
        raise HypothesisError("G1 must be connected with at least two vertices")
    if not is_connected(g2):
        raise HypothesisError("G2 must be connected")
    if is_bipartite(g2) is None:
        raise HypothesisError("G2 must be bipartite")


def verify_relocation(g1: Graph, v1: int, v2: int, g2: Graph, u: int) -> VerificationReport:
    """
    Compare q_min of G = G1(v2) <> G2(u) and G* = G1(v1) <> G2(u).

    Needs a first Q-eigenvector x of G with |x(v1)| >= |x(v2)|; otherwise
    the verdict is indeterminate. Pass iff q_min(G*) <= q_min(G) + slack.
    """
    _require_inputs(g1, v1, v2, g2, u)
    params = {"v1": v1, "v2": v2, "u": u, "n1": g1.n, "n2": g2.n}
    graph = coalesce(g1, v2, g2, u)
    moved = coalesce(g1, v1, g2, u)
    base = q_min(graph)
    x = base.vector

    # |x| is invariant under x -> -x, so one comparison covers both signs
    hypothesis_gap = abs(x[v1]) - abs(x[v2])
    if hypothesis_gap < -TOLERANCES.hypothesis_slack:
        logger.info("relocation_hypothesis_unmet", **params, gap=float(hypothesis_gap))
        return VerificationReport(
            check_id=CHECK_ID,
            params=params,
            verdict=Verdict.INDETERMINATE,
            tolerance=-TOLERANCES.relocation_slack,
            witnesses=[
                Witness.of(
                    "hypothesis |x(v1)| >= |x(v2)| unmet",
                    graph,
                    x_v1=float(x[v1]),
                    x_v2=float(x[v2]),
                )
            ],
            notes=["hypothesis fails for x and -x"],
        )

    relocated = q_min(moved)
    delta = base.qmin - relocated.qmin
    witnesses: List[Witness] = []
    notes: List[str] = []
    if abs(delta) <= TOLERANCES.relocation_equality:
        mapping = coalesce_mapping(g1.n, g2.n, v2, u)
        root_term = g2.degree(u) * x[v2] + sum(x[mapping[w]] for w in iter_bits(g2.adj[u]))
        abs_gap = float(np.abs(np.abs(relocated.vector) - np.abs(x)).max())
        notes.append(
            "near-equality: reporting |x(v1)|-|x(v2)|, d_G2(u) x(u) + sum x(N_G2(u)) "
            "and max ||x*|-|x|| (degree read in G2)"
        )
        witnesses.append(
            Witness.of(
                "equality diagnostics",
                graph,
                abs_value_gap=float(abs(abs(x[v1]) - abs(x[v2]))),
                root_equation=float(root_term),
                abs_vector_gap=abs_gap,
            )
        )

    verdict = Verdict.PASS if delta >= -TOLERANCES.relocation_slack else Verdict.FAIL
    if verdict is Verdict.FAIL:
        witnesses.append(
            Witness.of(
                "relocation increased q_min",
                moved,
                qmin_before=base.qmin,
                qmin_after=relocated.qmin,
            )
        )
        witnesses.append(Witness.of("graph before relocation", graph, qmin=base.qmin))
        logger.warning("relocation_failed", **params, delta=float(delta))
    return VerificationReport(
        check_id=CHECK_ID,
        params=params,
        verdict=verdict,
        margin=float(delta),
        tolerance=-TOLERANCES.relocation_slack,
        witnesses=witnesses,
        notes=notes,
    )


def verify_relocation_random(
    trials: int = 500,
    seed: int = 0,
    rng: Optional[np.random.Generator] = None,
) -> VerificationReport:
    """
    Randomized relocation runs with non-bipartite G1 and bipartite G2.

    A trial whose hypothesis fails for (v1, v2) is retried as (v2, v1); if
    both orientations fail it is skipped and counted in the notes.
    """
    rng = rng or np.random.default_rng(seed)
    reports: List[VerificationReport] = []
    skipped = 0
    for _ in range(trials):
        g1 = random_connected_non_bipartite(int(rng.integers(3, 7)), 0.4, rng)
        g2 = random_connected_bipartite(int(rng.integers(2, 6)), 0.3, rng)
        u = int(rng.integers(g2.n))
        v1, v2 = (int(v) for v in rng.choice(g1.n, size=2, replace=False))
        report = verify_relocation(g1, v1, v2, g2, u)
        if report.verdict is Verdict.INDETERMINATE:
            report = verify_relocation(g1, v2, v1, g2, u)
        if report.verdict is Verdict.INDETERMINATE:
            skipped += 1
            continue
        reports.append(report)
    merged = merge_reports(
        CHECK_ID,
        {"trials": trials, "seed": seed},
        reports,
        tolerance=-TOLERANCES.relocation_slack,
    )
    merged.notes.append(f"{skipped} trials skipped: hypothesis unmet in both orientations")
    return merged
