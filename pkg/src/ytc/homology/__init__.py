"""Exact reduced homology, Reisner's test and Hochster-formula oracles."""

from .chains import (
    BettiVector,
    Field,
    betti_from_faces,
    facet_betti,
    field_discrepancies,
    reduced_betti,
)
from .hochster import (
    GradedBettiTable,
    hochster_table,
    induced_homology,
    leray_oracle,
    pd_oracle,
    regularity_oracle,
)
from .linalg import rank_gf2, rank_rational
from .reisner import is_cohen_macaulay

__all__ = [
    "BettiVector",
    "Field",
    "GradedBettiTable",
    "betti_from_faces",
    "facet_betti",
    "field_discrepancies",
    "hochster_table",
    "induced_homology",
    "is_cohen_macaulay",
    "leray_oracle",
    "pd_oracle",
    "rank_gf2",
    "rank_rational",
    "reduced_betti",
    "regularity_oracle",
]
