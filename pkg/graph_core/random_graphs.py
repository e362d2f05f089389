"""Seeded random graph generators for property runs."""

import numpy as np

from graph_core.graph import Graph, make_graph
from graph_core.structure import is_bipartite, is_connected


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdos-Renyi G(n, p)."""
    mask = rng.random((n, n)) < p
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if mask[u, v]])


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Random recursive tree: vertex v attaches to a uniform earlier vertex."""
    return make_graph(n, [(int(rng.integers(v)), v) for v in range(1, n)])


def random_connected_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """A random tree overlaid with G(n, p) edges, hence connected."""
    tree = random_tree(n, rng)
    extra = random_graph(n, p, rng)
    return tree.with_edges(extra.edges())


def random_connected_bipartite(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Random tree plus extra edges that respect the tree's 2-colouring."""
    tree = random_tree(n, rng)
    parts = is_bipartite(tree)
    assert parts is not None
    side0 = parts[0]
    mask = rng.random((n, n)) < p
    extra = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if mask[u, v] and ((u in side0) != (v in side0))
    ]
    return tree.with_edges(extra)


def random_connected_non_bipartite(
    n: int, p: float, rng: np.random.Generator, max_tries: int = 1000
) -> Graph:
    """Rejection-sample a connected non-bipartite graph (n >= 3)."""
    for _ in range(max_tries):
        graph = random_connected_graph(n, p, rng)
        if is_connected(graph) and is_bipartite(graph) is None:
            return graph
    raise RuntimeError(f"no non-bipartite sample after {max_tries} tries (n={n}, p={p})")


def random_with_pendant_trees(
    core_order: int, tree_order: int, p: float, rng: np.random.Generator
) -> Graph:
    """A connected non-bipartite core with random trees hung on core vertices."""
    core = random_connected_non_bipartite(core_order, p, rng)
    edges = list(core.edges())
    n = core_order
    for _ in range(tree_order):
        edges.append((int(rng.integers(n)), n))
        n += 1
    return make_graph(n, edges)
