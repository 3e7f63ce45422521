"""Abstract simplicial complexes and the basic constructions on them."""

from .duality import alexander_dual, helly_number, minimal_nonface_masks, minimal_nonfaces
from .hypergraph import minimal_transversals, minimum_transversal
from .operations import (
    cone,
    deletion,
    induced_subcomplex,
    join,
    link,
    star,
    suspension,
)
from .simplicial import (
    Face,
    SimplicialComplex,
    Status,
    canonical_order,
    face_mask,
    from_facets,
    make_face,
    mask_face,
    popcount,
)

__all__ = [
    "Face",
    "SimplicialComplex",
    "Status",
    "alexander_dual",
    "canonical_order",
    "cone",
    "deletion",
    "face_mask",
    "helly_number",
    "from_facets",
    "induced_subcomplex",
    "join",
    "link",
    "make_face",
    "mask_face",
    "minimal_nonface_masks",
    "minimal_nonfaces",
    "minimal_transversals",
    "minimum_transversal",
    "popcount",
    "star",
    "suspension",
]
