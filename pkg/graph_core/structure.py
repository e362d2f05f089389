"""BFS-based structural predicates."""

from collections import deque
from typing import FrozenSet, List, Optional, Tuple

from graph_core.graph import Graph, iter_bits

Bipartition = Tuple[FrozenSet[int], FrozenSet[int]]


def bfs_tree(graph: Graph, source: int) -> Tuple[List[int], List[int]]:
    """Distances and BFS parents from `source`; -1 marks unreachable / root."""
    dist = [-1] * graph.n
    parent = [-1] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in iter_bits(graph.adj[u]):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    return dist, parent


def components(graph: Graph) -> List[List[int]]:
    """Connected components, each sorted, ordered by least vertex."""
    seen = 0
    result = []
    for s in range(graph.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= graph.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        result.append(list(iter_bits(comp)))
    return result


def is_connected(graph: Graph) -> bool:
    return len(components(graph)) == 1


def is_bipartite(graph: Graph) -> Optional[Bipartition]:
    """A proper 2-colouring (colour-0 side first) or None."""
    colour = [-1] * graph.n
    for s in range(graph.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(graph.adj[u]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    side0 = frozenset(v for v in range(graph.n) if colour[v] == 0)
    side1 = frozenset(v for v in range(graph.n) if colour[v] == 1)
    return side0, side1


def shortest_odd_cycle(graph: Graph) -> Optional[List[int]]:
    """
    A shortest odd cycle as a vertex sequence, or None for bipartite graphs.

    For every root s, an edge uv with dist(s,u) == dist(s,v) closes an odd
    walk of length 2d+1; the minimum over all roots is the odd girth and the
    two BFS paths of the minimizing root meet only at s.
    """
    best: Optional[Tuple[int, int, int, int]] = None
    for s in range(graph.n):
        dist, _ = bfs_tree(graph, s)
        for u, v in graph.edges():
            if dist[u] >= 0 and dist[u] == dist[v]:
                length = 2 * dist[u] + 1
                if best is None or length < best[0]:
                    best = (length, s, u, v)
    if best is None:
        return None
    _, s, u, v = best
    _, parent = bfs_tree(graph, s)
    left = _path_to_root(parent, u)
    right = _path_to_root(parent, v)
    # strip the shared tail, keeping one copy of the meeting vertex
    while len(left) > 1 and len(right) > 1 and left[-2] == right[-2]:
        left.pop()
        right.pop()
    return left + right[-2::-1]


def _path_to_root(parent: List[int], v: int) -> List[int]:
    path = [v]
    while parent[path[-1]] >= 0:
        path.append(parent[path[-1]])
    return path


def odd_girth(graph: Graph) -> Optional[int]:
    cycle = shortest_odd_cycle(graph)
    return None if cycle is None else len(cycle)


def girth(graph: Graph) -> Optional[int]:
    """Length of a shortest cycle; None for forests."""
    best: Optional[int] = None
    for s in range(graph.n):
        dist, parent = bfs_tree(graph, s)
        for u, v in graph.edges():
            if dist[u] < 0 or parent[u] == v or parent[v] == u:
                continue
            length = dist[u] + dist[v] + 1
            if best is None or length < best:
                best = length
    return best


def pendant_vertices(graph: Graph) -> FrozenSet[int]:
    return frozenset(v for v, d in enumerate(graph.degrees()) if d == 1)


def quasi_pendant_vertices(graph: Graph) -> FrozenSet[int]:
    """Vertices adjacent to at least one pendant vertex."""
    result = set()
    for p in pendant_vertices(graph):
        result.update(iter_bits(graph.adj[p]))
    return frozenset(result)


def is_unicyclic(graph: Graph) -> bool:
    return is_connected(graph) and graph.edge_count == graph.n


def isolated_vertices(graph: Graph) -> FrozenSet[int]:
    return frozenset(v for v, row in enumerate(graph.adj) if row == 0)
