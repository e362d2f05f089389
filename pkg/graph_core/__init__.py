"""Graph values, structural predicates, constructions and graph6 I/O."""

from graph_core.graph import MAX_VERTICES, Edge, Graph, degree, iter_bits, make_graph, mask_of
from graph_core.constructors import (
    FamilyParams,
    build_U,
    coalesce,
    coalesce_mapping,
    complete,
    cycle,
    path,
    star,
    u_cycle_labels,
    u_star_center,
)
from graph_core.structure import (
    Bipartition,
    components,
    girth,
    is_bipartite,
    is_connected,
    is_unicyclic,
    isolated_vertices,
    odd_girth,
    pendant_vertices,
    quasi_pendant_vertices,
    shortest_odd_cycle,
)
from graph_core.graph6 import graph6_decode, graph6_encode, read_graph6_lines

__all__ = [
    "MAX_VERTICES",
    "Edge",
    "Graph",
    "degree",
    "iter_bits",
    "make_graph",
    "mask_of",
    "FamilyParams",
    "build_U",
    "coalesce",
    "coalesce_mapping",
    "complete",
    "cycle",
    "path",
    "star",
    "u_cycle_labels",
    "u_star_center",
    "Bipartition",
    "components",
    "girth",
    "is_bipartite",
    "is_connected",
    "is_unicyclic",
    "isolated_vertices",
    "odd_girth",
    "pendant_vertices",
    "quasi_pendant_vertices",
    "shortest_odd_cycle",
    "graph6_decode",
    "graph6_encode",
    "read_graph6_lines",
]
