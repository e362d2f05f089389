"""
Exhaustive enumeration of small graphs up to isomorphism.

Order-n classes are grown from canonical order-(n-1) parents by adding a
vertex with every possible neighbourhood and keeping one canonical form per
class. Connected classes only need connected parents: every connected graph
has a vertex whose removal leaves it connected (a leaf of a spanning tree).
Parents are the work units of the parallel strategy; the merge is a sorted
union, so output never depends on scheduling.
"""

from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from config.settings import settings
from domination.solver import domination_number
from execution.models.errors import SizeGuardError
from execution.strategies import run_work_units
from extremal.canonical import canonical_form
from extremal.models import GraphFilter
from graph_core.graph import Graph, make_graph
from graph_core.graph6 import graph6_decode
from graph_core.structure import is_bipartite, is_unicyclic, odd_girth, pendant_vertices
from observability.logger import get_logger

logger = get_logger(__name__)

LABELED_MAX_ORDER = 5


def check_order(n: int, allow_large: bool = False) -> None:
    limit = settings.large_enumeration_order if allow_large else settings.max_enumeration_order
    if not 1 <= n <= limit:
        hint = "" if allow_large else " (pass allow_large for the opt-in order)"
        raise SizeGuardError(
            f"enumeration supports 1 <= n <= {limit}, got n={n}{hint}",
            params={"n": n, "allow_large": allow_large},
        )


def _children(unit: Tuple[bytes, bool]) -> List[bytes]:
    """Canonical forms of all one-vertex extensions of a parent."""
    parent_g6, connected = unit
    parent = graph6_decode(parent_g6.decode("ascii"))
    m = parent.n
    edges = parent.edges()
    forms = set()
    for subset in range(1 if connected else 0, 1 << m):
        child = make_graph(m + 1, edges + [(v, m) for v in range(m) if subset >> v & 1])
        forms.add(canonical_form(child))
    return sorted(forms)


@lru_cache(maxsize=32)
def _classes(n: int, connected: bool, workers: int = 1) -> Tuple[bytes, ...]:
    if n == 1:
        return (canonical_form(make_graph(1, [])),)
    parents = _classes(n - 1, connected, workers)
    units = [(p, connected) for p in parents]
    batches = run_work_units(_children, units, workers)
    merged = sorted({form for batch in batches for form in batch})
    logger.info(
        "enumeration_level",
        order=n,
        connected=connected,
        parents=len(parents),
        classes=len(merged),
    )
    return tuple(merged)


def matches(graph: Graph, filters: GraphFilter) -> bool:
    if filters.unicyclic and not is_unicyclic(graph):
        return False
    if filters.pendant_count is not None and len(pendant_vertices(graph)) != filters.pendant_count:
        return False
    if filters.non_bipartite and is_bipartite(graph) is not None:
        return False
    if filters.odd_girth is not None and odd_girth(graph) != filters.odd_girth:
        return False
    if filters.gamma is not None and domination_number(graph).gamma != filters.gamma:
        return False
    return True


def enumerate_graphs(
    n: int,
    filters: Optional[GraphFilter] = None,
    allow_large: bool = False,
    workers: Optional[int] = None,
) -> Iterator[Graph]:
    """
    One graph per isomorphism class satisfying `filters`, in ascending
    canonical order. n <= 7 by default, n = 8 with `allow_large`.
    """
    filters = filters or GraphFilter()
    check_order(n, allow_large)
    for form in _classes(n, filters.connected, workers or settings.threads):
        graph = graph6_decode(form.decode("ascii"))
        if matches(graph, filters):
            yield graph


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """Every labeled graph on n <= 5 vertices, one per upper-triangle bitmask."""
    if not 1 <= n <= LABELED_MAX_ORDER:
        raise SizeGuardError(
            f"labeled enumeration limited to n <= {LABELED_MAX_ORDER}, got {n}",
            params={"n": n},
        )
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    for mask in range(1 << len(pairs)):
        yield make_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
