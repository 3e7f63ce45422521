"""t-path ideals of path graphs, their squarefree powers and the associated complexes."""

from .complexes import (
    KrullHeight,
    dual_complex,
    krull_height_oracle,
    minimal_prime_witness,
    stanley_reisner_complex,
)
from .ideal import (
    Matching,
    MonomialSet,
    PathIdealSpec,
    matching_numbers,
    matchings,
    max_matching_size,
    squarefree_power_generators,
)

__all__ = [
    "KrullHeight",
    "Matching",
    "MonomialSet",
    "PathIdealSpec",
    "dual_complex",
    "krull_height_oracle",
    "matching_numbers",
    "matchings",
    "max_matching_size",
    "minimal_prime_witness",
    "squarefree_power_generators",
    "stanley_reisner_complex",
]
