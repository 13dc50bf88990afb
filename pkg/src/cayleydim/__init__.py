"""Exact metric dimension of Cayley graphs on finite Abelian groups."""

from .cayley import ConnectionSet, build_cayley, enumerate_connection_sets
from .graph import DistanceMatrix, Graph, all_pairs_distances, is_isomorphic
from .groups import AbelianGroup, GroupElement, abelian_groups_of_order, parse_group
from .metricdim import DimensionResult, is_resolving, metric_dimension

__all__ = [
    "AbelianGroup",
    "ConnectionSet",
    "DimensionResult",
    "DistanceMatrix",
    "Graph",
    "GroupElement",
    "abelian_groups_of_order",
    "all_pairs_distances",
    "build_cayley",
    "enumerate_connection_sets",
    "is_isomorphic",
    "is_resolving",
    "metric_dimension",
    "parse_group",
]
