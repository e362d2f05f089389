"""
Exact minimum dominating sets.

Branch-and-bound over bitset closed neighbourhoods: always branch on the
undominated vertex with the fewest candidate dominators, trying those
candidates in ascending label order. A greedy cover gives the first bound;
later solutions must be strictly smaller, so the returned witness is the
first minimum set met in branch order. Worst case is exponential in n.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Tuple

from execution.models.errors import GraphError, SizeGuardError
from graph_core.graph import Graph, iter_bits

BRUTEFORCE_MAX_ORDER = 20


@dataclass(frozen=True)
class DominationCertificate:
    gamma: int
    witness: FrozenSet[int]

    def sorted_witness(self) -> List[int]:
        return sorted(self.witness)


def _closed_masks(graph: Graph) -> Tuple[int, ...]:
    return tuple(graph.adj[v] | (1 << v) for v in range(graph.n))


def dominates(graph: Graph, vertices: Iterable[int]) -> bool:
    """True iff the closed neighbourhoods of `vertices` cover V(G)."""
    covered = 0
    for v in vertices:
        graph.check_vertex(v)
        covered |= graph.closed_neighborhood(v)
    return covered == (1 << graph.n) - 1


def greedy_dominating_set(graph: Graph) -> List[int]:
    """Repeatedly take the vertex covering most undominated vertices (ties: lowest)."""
    closed = _closed_masks(graph)
    full = (1 << graph.n) - 1
    dominated = 0
    chosen: List[int] = []
    while dominated != full:
        undominated = full & ~dominated
        best = max(range(graph.n), key=lambda v: (bin(closed[v] & undominated).count("1"), -v))
        chosen.append(best)
        dominated |= closed[best]
    return sorted(chosen)


class _BranchAndBound:
    def __init__(self, graph: Graph):
        self.n = graph.n
        self.closed = _closed_masks(graph)
        self.full = (1 << graph.n) - 1
        greedy = greedy_dominating_set(graph)
        self.limit = len(greedy)
        self.best: Optional[Tuple[int, ...]] = None

    def run(self) -> Tuple[int, ...]:
        self._search([], 0)
        assert self.best is not None, "complete search must meet the greedy bound"
        return self.best

    def _lower_bound(self, undominated: int) -> int:
        remaining = bin(undominated).count("1")
        reach = max(bin(c & undominated).count("1") for c in self.closed)
        return -(-remaining // reach)

    def _search(self, chosen: List[int], dominated: int) -> None:
        if dominated == self.full:
            if self.best is None or len(chosen) < len(self.best):
                self.best = tuple(sorted(chosen))
                self.limit = len(chosen) - 1
            return
        undominated = self.full & ~dominated
        if len(chosen) + self._lower_bound(undominated) > self.limit:
            return
        # least-covered undominated vertex; every dominating set contains one of N[u]
        pivot = min(
            iter_bits(undominated),
            key=lambda u: (bin(self.closed[u]).count("1"), u),
        )
        for v in iter_bits(self.closed[pivot]):
            chosen.append(v)
            self._search(chosen, dominated | self.closed[v])
            chosen.pop()


@lru_cache(maxsize=65536)
def domination_number(graph: Graph) -> DominationCertificate:
    """Exact gamma(G) with a deterministic minimum dominating set."""
    best = _BranchAndBound(graph).run()
    return DominationCertificate(gamma=len(best), witness=frozenset(best))


def domination_number_bruteforce(graph: Graph) -> DominationCertificate:
    """Subsets by increasing size, lexicographic within a size; n <= 20."""
    if graph.n > BRUTEFORCE_MAX_ORDER:
        raise SizeGuardError(
            f"brute-force domination limited to n <= {BRUTEFORCE_MAX_ORDER}, got {graph.n}",
            params={"n": graph.n},
        )
    closed = _closed_masks(graph)
    full = (1 << graph.n) - 1
    for size in range(1, graph.n + 1):
        for subset in combinations(range(graph.n), size):
            covered = 0
            for v in subset:
                covered |= closed[v]
            if covered == full:
                return DominationCertificate(gamma=size, witness=frozenset(subset))
    raise GraphError("unreachable: V(G) always dominates itself")

