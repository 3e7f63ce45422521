"""Reisner's criterion for the Cohen–Macaulay property."""

import structlog

from ..complexes import SimplicialComplex, link, mask_face
from ..core.config import enforce_limit
from ..exceptions import DomainError
from .chains import Field, reduced_betti

logger = structlog.get_logger()


def is_cohen_macaulay(complex_: SimplicialComplex, field: Field = Field.RATIONALS) -> bool:
    """True iff every link (the empty face included) has no reduced homology below its dimension.

    Raises:
        CapacityError: If the complex has more than `cohen_macaulay_max_vertices` vertices
        DomainError: If the complex is void
    """
    if complex_.is_void:
        raise DomainError("The Cohen–Macaulay property is undefined for the void complex")
    enforce_limit("vertex count", len(complex_.vertices), "cohen_macaulay_max_vertices")
    for face in sorted(complex_.face_masks):
        lk = link(complex_, mask_face(face))
        dimension = lk.dimension
        betti = reduced_betti(lk, field)
        if any(degree < dimension for degree in betti.degrees):
            logger.debug("reisner obstruction", face=mask_face(face), betti=betti.as_dict())
            return False
    return True
