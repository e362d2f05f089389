"""
Named graphs, coalescence and the U_n^k(g) family.

Labeling of U_n^k(g) (fixed; eigenvector checks address vertices by it):

    cycle      v_1 .. v_{g-1}  ->  labels 1 .. g-1,   v_g -> label 0
    path       label 0 (= v_g), then g, g+1, .., g+l-2; the last is the
               star centre (the centre is label 0 itself when l = 1)
    leaves     the next k labels, all adjacent to the centre

so the path leaves the cycle at v_g, the vertex adjacent to v_1 and v_{g-1}.
"""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from execution.models.errors import GraphError, ParameterDomainError
from graph_core.graph import Edge, Graph, make_graph


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}", params={"n": n})
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}", params={"n": n})
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0 and leaves 1..k."""
    if k < 1:
        raise GraphError(f"star needs k >= 1, got {k}", params={"k": k})
    return make_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete(n: int) -> Graph:
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def coalesce(g1: Graph, v: int, g2: Graph, u: int) -> Graph:
    """
    G1(v) <> G2(u): identify v with u.

    G1 keeps its labels; u is mapped onto v and the remaining vertices of G2
    take labels |V1|, |V1|+1, .. in their original order.
    """
    g1.check_vertex(v)
    g2.check_vertex(u)
    mapping = coalesce_mapping(g1.n, g2.n, v, u)
    edges: List[Edge] = list(g1.edges())
    edges.extend((mapping[a], mapping[b]) for a, b in g2.edges())
    return make_graph(g1.n + g2.n - 1, edges)


def coalesce_mapping(n1: int, n2: int, v: int, u: int) -> List[int]:
    """Label of every G2 vertex inside G1(v) <> G2(u)."""
    mapping = []
    nxt = n1
    for w in range(n2):
        if w == u:
            mapping.append(v)
        else:
            mapping.append(nxt)
            nxt += 1
    return mapping


class FamilyParams(BaseModel):
    """Parameters (n, g, k) of U_n^k(g) or (n, g, gamma) of V_n^gamma(g)."""

    model_config = ConfigDict(frozen=True)

    n: int
    g: int
    k: Optional[int] = None
    gamma: Optional[int] = None

    @model_validator(mode="after")
    def _check(self) -> "FamilyParams":
        if self.g % 2 == 0 or self.g < 3:
            raise ParameterDomainError(
                f"girth must be odd and >= 3, got g={self.g}",
                constraint="g odd, g >= 3",
                params=self.model_dump(),
            )
        if self.g >= self.n:
            raise ParameterDomainError(
                f"girth must be below the order, got g={self.g}, n={self.n}",
                constraint="g < n",
                params=self.model_dump(),
            )
        if (self.k is None) == (self.gamma is None):
            raise ParameterDomainError(
                "exactly one of k and gamma must be given",
                constraint="k xor gamma",
                params=self.model_dump(),
            )
        if self.k is not None:
            if self.k < 1:
                raise ParameterDomainError(
                    f"star size must be >= 1, got k={self.k}",
                    constraint="k >= 1",
                    params=self.model_dump(),
                )
            if self.n + 1 - self.g - self.k < 1:
                raise ParameterDomainError(
                    f"path length l = n+1-g-k must be >= 1 (n={self.n}, g={self.g}, k={self.k})",
                    constraint="l = n+1-g-k >= 1",
                    params=self.model_dump(),
                )
        if self.gamma is not None:
            # local import: domination depends on graph_core
            from domination.formula import gamma_g_formula

            low = -(-self.g // 3)
            high = gamma_g_formula(self.n, self.g)
            if not low <= self.gamma <= high:
                raise ParameterDomainError(
                    f"gamma must lie in [{low}, {high}], got {self.gamma}",
                    constraint="ceil(g/3) <= gamma <= gamma_g(n, g)",
                    params=self.model_dump(),
                )
        return self

    @property
    def l(self) -> int:  # noqa: E743
        if self.k is None:
            raise ValueError("path length is only defined for (n, g, k) parameters")
        return self.n + 1 - self.g - self.k


def u_cycle_labels(g: int) -> List[int]:
    """Labels of v_1, .., v_g (index i-1 holds the label of v_i)."""
    return list(range(1, g)) + [0]


def u_star_center(n: int, k: int, g: int) -> int:
    l = n + 1 - g - k
    return 0 if l == 1 else g + l - 2


def build_U(n: int, k: int, g: int) -> Graph:
    """U_n^k(g): odd cycle C_g, a path P_l from v_g to the centre of S_{1,k}."""
    params = FamilyParams(n=n, g=g, k=k)
    edges: List[Edge] = [(i, (i + 1) % g) for i in range(g)]
    prev = 0
    for label in range(g, g + params.l - 1):
        edges.append((prev, label))
        prev = label
    centre = prev
    first_leaf = g + params.l - 1
    edges.extend((centre, leaf) for leaf in range(first_leaf, first_leaf + k))
    return make_graph(n, edges)
