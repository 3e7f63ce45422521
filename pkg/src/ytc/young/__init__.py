"""Partitions, t-fillings and t-Young complexes."""

from .diagram import (
    YoungFilling,
    column_poset,
    identified_partition,
    order_complex_presentation,
    young_complex,
    young_filling,
)
from .partition import Partition, parse_partition, partitions_of, partitions_up_to

__all__ = [
    "Partition",
    "YoungFilling",
    "column_poset",
    "identified_partition",
    "order_complex_presentation",
    "parse_partition",
    "partitions_of",
    "partitions_up_to",
    "young_complex",
    "young_filling",
]
