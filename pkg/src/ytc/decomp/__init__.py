"""Direct checkers for vertex decomposability and shellability."""

from .certificate import (
    DecompCertificate,
    DecompKind,
    Obstruction,
    VDNode,
    replay_shelling,
    replay_vertex_decomposition,
)
from .shelling import is_shellable
from .vertex import is_vertex_decomposable, shedding_vertices

__all__ = [
    "DecompCertificate",
    "DecompKind",
    "Obstruction",
    "VDNode",
    "is_shellable",
    "is_vertex_decomposable",
    "replay_shelling",
    "replay_vertex_decomposition",
    "shedding_vertices",
]
