"""Immutable simple graphs stored as adjacency-row bitsets."""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from execution.models.errors import GraphError

# Build-time vertex cap: one machine-word bitset row per vertex.
MAX_VERTICES = 64

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    `adj[v]` is the bitset of neighbours of `v`. Instances are hashable and
    never mutated; every operation that changes edges returns a new graph.
    """

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(
                f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}",
                params={"n": self.n},
            )
        if len(self.adj) != self.n:
            raise GraphError(
                "adjacency must have one row per vertex",
                params={"n": self.n, "rows": len(self.adj)},
            )
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= n", params={"v": v})
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}", params={"v": v})
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(
                        f"adjacency not symmetric on edge ({v}, {u})",
                        params={"u": u, "v": v},
                    )

    # Accessors

    @property
    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(
                f"vertex {v} out of range 0..{self.n - 1}", params={"v": v, "n": self.n}
            )

    def neighbors(self, v: int) -> List[int]:
        self.check_vertex(v)
        return list(iter_bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        """Bitset N[v] = N(v) + {v}."""
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return bin(self.adj[v]).count("1")

    def degrees(self) -> List[int]:
        return [bin(row).count("1") for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Edge]:
        """Edges (u, v) with u < v in ascending order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    # Derived graphs

    def with_edges(self, edges: Iterable[Edge]) -> "Graph":
        return make_graph(self.n, list(self.edges()) + list(edges))

    def without_edges(self, edges: Iterable[Edge]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with old vertex `v` renamed to `perm[v]`."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return make_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def make_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """
    Build a simple graph from an edge list.

    Duplicate edges collapse silently; loops and out-of-range endpoints raise
    GraphError.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(
            f"vertex count must be in 1..{MAX_VERTICES}, got {n}", params={"n": n}
        )
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(
                f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}",
                params={"u": u, "v": v, "n": n},
            )
        if u == v:
            raise GraphError(f"loop edge at vertex {u}", params={"u": u})
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def degree(graph: Graph, v: int) -> int:
    return graph.degree(v)
