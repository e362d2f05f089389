"""
Canonical forms for isomorphism rejection on small graphs.

Vertices are first split into cells by iterated degree refinement (colour,
sorted neighbour colours) until the partition is stable. The canonical form
is the lexicographically least upper-triangle bit string (graph6 column
order) over all labelings that list the cells in colour order, returned as
the graph6 bytes of that labeling. Refinement is isomorphism invariant, so
isomorphic graphs yield equal forms.
"""

from itertools import permutations, product
from typing import List, Sequence, Tuple

from execution.models.errors import SizeGuardError
from graph_core.graph import Graph, iter_bits, make_graph
from graph_core.graph6 import graph6_encode

CANONICAL_MAX_ORDER = 10


def refine_cells(graph: Graph) -> List[List[int]]:
    """Stable equitable-style partition, cells ordered by colour."""
    colours = graph.degrees()
    classes = len(set(colours))
    while True:
        signatures = [
            (colours[v], tuple(sorted(colours[w] for w in iter_bits(graph.adj[v]))))
            for v in range(graph.n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        colours = [ranking[sig] for sig in signatures]
        if len(ranking) == classes:
            break
        classes = len(ranking)
    cells: List[List[int]] = [[] for _ in range(classes)]
    for v, c in enumerate(colours):
        cells[c].append(v)
    return cells


def _bit_key(graph: Graph, order: Sequence[int]) -> int:
    """Upper-triangle bits of the labeling order[i] -> i, first bit most significant."""
    key = 0
    adj = graph.adj
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            key = key << 1 | (row >> order[i] & 1)
    return key


def canonical_order(graph: Graph) -> Tuple[int, ...]:
    """Vertex order whose relabeling gives the canonical form."""
    if graph.n > CANONICAL_MAX_ORDER:
        raise SizeGuardError(
            f"canonical form limited to n <= {CANONICAL_MAX_ORDER}, got {graph.n}",
            params={"n": graph.n},
        )
    cells = refine_cells(graph)
    best_key = -1
    best_order: Tuple[int, ...] = tuple(range(graph.n))
    for parts in product(*(permutations(cell) for cell in cells)):
        order = tuple(v for part in parts for v in part)
        key = _bit_key(graph, order)
        if best_key < 0 or key < best_key:
            best_key = key
            best_order = order
    return best_order


def canonical_graph(graph: Graph) -> Graph:
    order = canonical_order(graph)
    position = {v: i for i, v in enumerate(order)}
    return make_graph(graph.n, [(position[u], position[v]) for u, v in graph.edges()])


def canonical_form(graph: Graph) -> bytes:
    return graph6_encode(canonical_graph(graph)).encode("ascii")


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.edge_count == b.edge_count and canonical_form(a) == canonical_form(b)
