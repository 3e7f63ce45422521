"""
ytc - exact computations on t-Young complexes and squarefree path-ideal powers

This package provides:
- t-Young complexes, their homotopy types and reduced homology over QQ and GF(2)
- Squarefree powers of t-path ideals of the path graph and their Stanley-Reisner complexes
- Hochster-formula oracles for projective dimension, regularity and Leray numbers
- Closed-form invariants checked against those oracles by ``ytc verify``
- Direct vertex-decomposability and shellability certificates
"""

from .__version__ import __version__
from .complexes import SimplicialComplex, alexander_dual, from_facets
from .core.config import Config, LimitsConfig, LoggingConfig, configure, get_config
from .core.logging import get_logger, setup_logging
from .decomp import DecompCertificate, is_shellable, is_vertex_decomposable
from .exceptions import (
    CapacityError,
    DomainError,
    InternalError,
    PartitionParseError,
    PreconditionError,
    YTCError,
)
from .formulas import chi, helly_formula, krull_formula, leray_formula, pd_formula
from .homology import BettiVector, Field, hochster_table, reduced_betti
from .homotopy import HomotopyClass, build_reduction_graph, dual_homotopy, young_homotopy
from .pathideal import PathIdealSpec, dual_complex, squarefree_power_generators
from .young import Partition, parse_partition, young_complex

__all__ = [
    "__version__",
    # Complexes
    "SimplicialComplex",
    "alexander_dual",
    "from_facets",
    "Partition",
    "parse_partition",
    "young_complex",
    "PathIdealSpec",
    "squarefree_power_generators",
    "dual_complex",
    # Topology
    "HomotopyClass",
    "young_homotopy",
    "dual_homotopy",
    "build_reduction_graph",
    "BettiVector",
    "Field",
    "reduced_betti",
    "hochster_table",
    "DecompCertificate",
    "is_vertex_decomposable",
    "is_shellable",
    # Closed forms
    "chi",
    "pd_formula",
    "krull_formula",
    "helly_formula",
    "leray_formula",
    # Configuration
    "Config",
    "LimitsConfig",
    "LoggingConfig",
    "configure",
    "get_config",
    "setup_logging",
    "get_logger",
    # Exceptions
    "YTCError",
    "DomainError",
    "PreconditionError",
    "PartitionParseError",
    "CapacityError",
    "InternalError",
]

# Default logging setup
setup_logging()
