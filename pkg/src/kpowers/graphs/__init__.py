"""Dense graphs and the small toolbox the rest of the package leans on."""

from .bits import VertexLike, as_mask, iter_bits, lowest, mask_of, members, popcount
from .cliques import clique_number, common_neighborhood, disjoint_cliques, extend_clique, iter_cliques
from .coloring import equitable_coloring, partiteness_certificate
from .core import Graph, disjoint_cliques_graph
from .io import from_edge_list, from_graph6, to_edge_list, to_graph6
from .matching import (
    Matching,
    bipartite_min_degree_matching,
    is_matching,
    maximum_bipartite_matching,
    maximum_matching,
    min_degree_matching,
)

__all__ = [
    "Graph",
    "Matching",
    "VertexLike",
    "as_mask",
    "bipartite_min_degree_matching",
    "clique_number",
    "common_neighborhood",
    "disjoint_cliques",
    "disjoint_cliques_graph",
    "equitable_coloring",
    "extend_clique",
    "from_edge_list",
    "from_graph6",
    "is_matching",
    "iter_bits",
    "iter_cliques",
    "lowest",
    "mask_of",
    "maximum_bipartite_matching",
    "maximum_matching",
    "members",
    "min_degree_matching",
    "partiteness_certificate",
    "popcount",
    "to_edge_list",
    "to_graph6",
]
