"""Symbolic homotopy types: wedges of spheres, the Young recursion and the reduction graph."""

from .graph import EdgeKind, GraphEdge, PathCount, ReductionGraph, build_reduction_graph
from .recursion import binomial_wedge, dual_homotopy, young_homotopy
from .wedge import HomotopyClass, repeat, suspend, wedge, wedge_all
from .witness import lower_bound_degree, top_homology_witness

__all__ = [
    "EdgeKind",
    "GraphEdge",
    "HomotopyClass",
    "PathCount",
    "ReductionGraph",
    "binomial_wedge",
    "build_reduction_graph",
    "dual_homotopy",
    "lower_bound_degree",
    "repeat",
    "suspend",
    "top_homology_witness",
    "wedge",
    "wedge_all",
    "young_homotopy",
]
