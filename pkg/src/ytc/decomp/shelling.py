"""Shelling orders of pure complexes by depth-first search over facet orderings."""

from typing import List, Sequence, Set, Tuple

import structlog

from ..complexes import Face, SimplicialComplex
from ..complexes.simplicial import iter_bits
from ..core.config import enforce_limit
from ..exceptions import DomainError, PreconditionError
from .certificate import DecompCertificate, DecompKind, Obstruction

logger = structlog.get_logger()


def _extends(current: int, earlier: Sequence[int]) -> bool:
    """True when the earlier facets meet ``current`` in a nonempty union of its ridges."""
    ridges = [current ^ bit for bit in iter_bits(current)]
    ridges = [r for r in ridges if any(r & g == r for g in earlier)]
    if not ridges:
        return False
    return all(any((g & current) & r == g & current for r in ridges) for g in earlier)


def is_shellable(complex_: SimplicialComplex) -> DecompCertificate:
    """Search for a shelling order of a pure complex.

    Facets are tried in canonical order. Whether a prefix can be completed depends only on
    the set of facets used, so sets already known to be dead ends are cut.

    Raises:
        DomainError: If the complex is void
        PreconditionError: If the complex is not pure
        CapacityError: If it has more than `shelling_max_facets` facets
    """
    if complex_.is_void:
        raise DomainError("Shellability is undefined for the void complex")
    if not complex_.is_pure:
        raise PreconditionError("Shelling orders are only searched for pure complexes")
    enforce_limit("facet count", len(complex_.facets), "shelling_max_facets")

    masks = complex_.facet_masks
    total = len(masks)
    full = (1 << total) - 1
    dead: Set[int] = set()
    best: List[int] = []

    def search(order: List[int], used: int) -> bool:
        if used == full:
            return True
        if used in dead:
            return False
        if len(order) > len(best):
            best[:] = order
        earlier = [masks[i] for i in order]
        for index in range(total):
            if used >> index & 1:
                continue
            if order and not _extends(masks[index], earlier):
                continue
            order.append(index)
            if search(order, used | 1 << index):
                return True
            order.pop()
        dead.add(used)
        return False

    found: List[int] = []
    verdict = search(found, 0)
    logger.debug("shelling search", facets=total, verdict=verdict, dead_ends=len(dead))
    if verdict:
        order: Tuple[Face, ...] = tuple(complex_.facets[i] for i in found)
        return DecompCertificate(True, DecompKind.SHELLING, order=order)
    prefix = tuple(complex_.facets[i] for i in best)
    return DecompCertificate(
        False, DecompKind.SHELLING, obstruction=Obstruction(len(prefix), prefix)
    )
