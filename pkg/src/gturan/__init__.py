"""Workbench for clique counts in graphs without disjoint copies of K_{a,b} or C_2k."""
from .cliques import CliqueProfile, clique_degree, clique_profile, count_cliques, neighborhood_clique_count
from .graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle,
    disjoint_union,
    induced_subgraph,
    join,
    path,
)
from .graph6 import from_graph6, to_graph6
from .kernels import BACKEND
from .patterns import (
    Arbitrary,
    Clique,
    CompleteBipartite,
    DisjointCopies,
    EvenCycle,
    Path,
    contains,
    is_free,
    max_disjoint_copies,
    parse_pattern,
)

__version__ = "0.1.0"

__all__ = [
    "Arbitrary",
    "BACKEND",
    "Clique",
    "CliqueProfile",
    "CompleteBipartite",
    "DisjointCopies",
    "EvenCycle",
    "Graph",
    "Path",
    "clique_degree",
    "clique_profile",
    "complete_bipartite",
    "complete_graph",
    "contains",
    "count_cliques",
    "cycle",
    "disjoint_union",
    "from_graph6",
    "induced_subgraph",
    "is_free",
    "join",
    "max_disjoint_copies",
    "neighborhood_clique_count",
    "parse_pattern",
    "path",
    "to_graph6",
]
