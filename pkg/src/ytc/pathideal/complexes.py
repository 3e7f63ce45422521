"""The Stanley–Reisner complex of ``I_{n,t}^{[k]}``, its Alexander dual and the ideal height."""

from typing import NamedTuple

import structlog

from ..complexes import (
    Face,
    SimplicialComplex,
    alexander_dual,
    from_facets,
    mask_face,
    minimal_transversals,
    minimum_transversal,
)
from ..core.config import enforce_limit, get_config
from ..exceptions import InternalError
from ..young import identified_partition, young_complex
from .ideal import PathIdealSpec, squarefree_power_generators

logger = structlog.get_logger()


class KrullHeight(NamedTuple):
    height: int
    dimension: int


def stanley_reisner_complex(spec: PathIdealSpec) -> SimplicialComplex:
    """Return ``Σ_{n,t}^{[k]}``, the complex on ``[n]`` whose minimal nonfaces are the supports.

    Facets are the complements of the minimal transversals of the supports. The zero
    ideal gives the full simplex on ``[n]``.

    Raises:
        CapacityError: If ``n`` exceeds `transversal_max_vertices`
        DomainError: If ``k = 0``
    """
    enforce_limit("path length n", spec.n, "transversal_max_vertices")
    generators = squarefree_power_generators(spec)
    universe = spec.vertices
    if not generators.supports:
        return from_facets([universe], universe=universe)
    full = (1 << (spec.n + 1)) - 2
    transversals = minimal_transversals(generators.masks)
    logger.debug("stanley-reisner complex", spec=str(spec), facets=len(transversals))
    return from_facets((mask_face(full & ~m) for m in transversals), universe=universe)


def dual_complex(spec: PathIdealSpec, oracle: bool = False) -> SimplicialComplex:
    """Return ``Δ_{n,t}^{[k]}``, the Alexander dual of the Stanley–Reisner complex.

    By default the dual comes from the t-Young complex of the rectangle
    ``(n - kt)^{k+1}``; with ``oracle`` it is built by dualizing
    `stanley_reisner_complex` instead. Both carry the universe ``[n]``.

    Example:
        ```python
        spec = PathIdealSpec(n=9, t=2, k=3)
        assert dual_complex(spec) == dual_complex(spec, oracle=True)
        ```
    """
    universe = spec.vertices
    if oracle and spec.k >= 1:
        return alexander_dual(stanley_reisner_complex(spec), universe)
    kt = spec.k * spec.t
    if spec.n < kt:
        return SimplicialComplex.void(universe)
    if spec.n == kt:
        return SimplicialComplex.irrelevant(universe)
    shape = identified_partition(spec.n, spec.k, spec.t)
    return young_complex(shape, spec.t).with_universe(universe)


def krull_height_oracle(spec: PathIdealSpec) -> KrullHeight:
    """Height of ``I_{n,t}^{[k]}`` as a minimum transversal of its supports, and ``n - height``.

    When ``n`` is small enough for `stanley_reisner_complex`, the dimension is
    cross-checked against ``dim Σ + 1``.

    Raises:
        DomainError: If ``k`` is outside ``1..⌊n/t⌋``
        CapacityError: If ``n`` exceeds `height_max_vertices`
        InternalError: If the two dimension computations disagree
    """
    spec.require_nonzero()
    enforce_limit("path length n", spec.n, "height_max_vertices")
    height, _ = minimum_transversal(squarefree_power_generators(spec).masks)
    dimension = spec.n - height
    if spec.n <= get_config().limits.transversal_max_vertices:
        sr = stanley_reisner_complex(spec)
        if sr.dimension is None or sr.dimension + 1 != dimension:
            raise InternalError(
                f"Krull dimension mismatch for {spec}: transversal gives {dimension}, "
                f"Stanley-Reisner complex gives {sr.dimension}"
            )
    return KrullHeight(height, dimension)


def minimal_prime_witness(spec: PathIdealSpec) -> Face:
    """The vertex set ``{t, 2t, …, (ν - k + 1)t}``, a transversal of minimum size.

    Raises:
        DomainError: If ``k`` is outside ``1..⌊n/t⌋``
    """
    spec.require_nonzero()
    return tuple(spec.t * i for i in range(1, spec.nu - spec.k + 2))
