"""Minimal nonfaces and Alexander duality over an explicit vertex universe."""

from typing import Iterable, List

import structlog

from ..exceptions import DomainError
from .hypergraph import minimal_transversals
from .simplicial import (
    Face,
    SimplicialComplex,
    canonical_order,
    face_mask,
    from_facets,
    make_face,
    mask_face,
    popcount,
)

logger = structlog.get_logger()


def _universe_mask(complex_: SimplicialComplex, universe: Iterable[int]) -> int:
    mask = face_mask(make_face(universe))
    if complex_.vertex_mask & ~mask:
        raise DomainError("The vertex set of the complex is not inside the universe")
    return mask


def minimal_nonface_masks(complex_: SimplicialComplex, universe: Iterable[int]) -> List[int]:
    """Minimal nonfaces as bitmasks.

    A set is a nonface exactly when it meets the complement of every facet, so the
    minimal nonfaces are the minimal transversals of those complements.
    """
    if complex_.is_void:
        raise DomainError("The void complex has no minimal nonfaces")
    full = _universe_mask(complex_, universe)
    complements = [full & ~m for m in complex_.facet_masks]
    return minimal_transversals(complements)


def minimal_nonfaces(complex_: SimplicialComplex, universe: Iterable[int]) -> List[Face]:
    """Return the inclusion-minimal subsets of ``universe`` that are not faces, canonically sorted.

    Raises:
        DomainError: If the complex is void or has vertices outside ``universe``
    """
    return canonical_order(mask_face(m) for m in minimal_nonface_masks(complex_, universe))


def alexander_dual(complex_: SimplicialComplex, universe: Iterable[int]) -> SimplicialComplex:
    """Return the Alexander dual: complements of the nonfaces, inside ``universe``.

    The full simplex on the universe dualizes to the void complex and the void complex
    to the full simplex.
    """
    universe = make_face(universe)
    full = _universe_mask(complex_, universe)
    if complex_.is_void:
        return from_facets([universe], universe=universe)
    nonfaces = minimal_nonface_masks(complex_, universe)
    logger.debug("alexander dual", facets=len(complex_.facets), minimal_nonfaces=len(nonfaces))
    if not nonfaces:
        return SimplicialComplex.void(universe)
    return from_facets((mask_face(full & ~n) for n in nonfaces), universe=universe)


def helly_number(complex_: SimplicialComplex, universe: Iterable[int]) -> int:
    """One less than the largest minimal nonface.

    The void complex has the empty set as its only minimal nonface and so gives -1, as
    does a complex in which every subset of ``universe`` is a face.
    """
    if complex_.is_void:
        return -1
    nonfaces = minimal_nonface_masks(complex_, universe)
    return max((popcount(m) for m in nonfaces), default=0) - 1
