"""Reduced simplicial homology over QQ and GF(2).

The augmented chain complex includes the empty face in degree -1, so ``{∅}`` has
reduced Betti number 1 in degree -1 and the void complex has no homology at all.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Collection, Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

import structlog

from ..complexes import SimplicialComplex, popcount
from ..complexes.simplicial import iter_bits, iter_submasks
from ..core.config import enforce_limit
from .linalg import SparseColumn, gf2_columns, rank_gf2, rank_rational

logger = structlog.get_logger()


class Field(str, Enum):
    """Coefficient field tag."""

    RATIONALS = "q"
    GF2 = "gf2"


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers, stored as the sorted nonzero ``(degree, value)`` pairs."""

    values: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "BettiVector":
        return cls(tuple(sorted((d, b) for d, b in mapping.items() if b)))

    def __getitem__(self, degree: int) -> int:
        return dict(self.values).get(degree, 0)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.values)

    @property
    def is_zero(self) -> bool:
        return not self.values

    @property
    def degrees(self) -> List[int]:
        return [d for d, _ in self.values]

    def euler_characteristic(self) -> int:
        """Alternating sum, equal to the reduced Euler characteristic of the complex."""
        return sum((-1) ** d * b for d, b in self.values)

    def __str__(self) -> str:
        if not self.values:
            return "0"
        return " ".join(f"b{d}={b}" for d, b in self.values)


def _boundary_columns(
    by_size: Dict[int, List[int]], size: int, index: Dict[int, int]
) -> List[SparseColumn]:
    """Columns of the boundary map from faces of ``size`` to faces of ``size - 1``."""
    columns = []
    for face in by_size[size]:
        column: SparseColumn = {}
        rest = face
        position = 0
        while rest:
            low = rest & -rest
            column[index[face ^ low]] = -1 if position % 2 else 1
            rest ^= low
            position += 1
        columns.append(column)
    return columns


def betti_from_faces(faces: Collection[int], field: Field = Field.RATIONALS) -> BettiVector:
    """Reduced Betti numbers of the complex whose faces are the given bitmasks.

    ``faces`` must be closed under taking subsets; an empty collection is the void complex.
    """
    if not faces:
        return BettiVector()
    by_size: Dict[int, List[int]] = {}
    for face in sorted(faces):
        by_size.setdefault(popcount(face), []).append(face)
    top = max(by_size)

    ranks = {0: 0, top + 1: 0}
    for size in range(1, top + 1):
        index = {face: i for i, face in enumerate(by_size[size - 1])}
        columns = _boundary_columns(by_size, size, index)
        if field is Field.GF2:
            ranks[size] = rank_gf2(gf2_columns(columns))
        else:
            ranks[size] = rank_rational(columns, len(index))

    return BettiVector.from_mapping(
        {
            size - 1: len(by_size[size]) - ranks[size] - ranks[size + 1]
            for size in range(top + 1)
        }
    )


def _maximal(masks: Iterable[int]) -> List[int]:
    """Inclusion-maximal members of ``masks``, sorted."""
    kept: List[int] = []
    for mask in sorted(set(masks), key=popcount, reverse=True):
        if not any(mask & other == mask for other in kept):
            kept.append(mask)
    return sorted(kept)


def _strong_core(facets: Iterable[int]) -> Optional[List[int]]:
    """Delete dominated vertices until none is left; ``None`` when the result is a cone.

    ``v`` is dominated by ``w`` when every facet through ``v`` also contains ``w``. The
    link of ``v`` is then a cone on ``w``, so deleting ``v`` keeps the homotopy type. Each
    round removes a batch of dominated vertices, pinning one dominator per removal.
    """
    current = _maximal(facets)
    while current and current != [0]:
        apex = -1
        vertices = 0
        for facet in current:
            apex &= facet
            vertices |= facet
        if apex:
            return None
        removed = pinned = 0
        for bit in iter_bits(vertices):
            if bit & pinned:
                continue
            shared = -1
            for facet in current:
                if facet & bit:
                    shared &= facet
            dominators = shared & ~bit & ~removed
            if dominators:
                removed |= bit
                pinned |= dominators & -dominators
        if not removed:
            break
        current = _maximal(facet & ~removed for facet in current)
    return current


def _relabel(facets: Sequence[int]) -> Tuple[int, ...]:
    """Move the vertices onto bits ``0..m-1`` so isomorphic cores share a cache entry."""
    vertices = 0
    for facet in facets:
        vertices |= facet
    position = {bit: 1 << i for i, bit in enumerate(iter_bits(vertices))}
    return tuple(sorted(sum(position[bit] for bit in iter_bits(f)) for f in facets))


@lru_cache(maxsize=16384)
def _core_betti(facets: Tuple[int, ...], field: Field) -> BettiVector:
    faces: Set[int] = set()
    for facet in facets:
        faces.update(iter_submasks(facet))
    return betti_from_faces(faces, field)


def facet_betti(facets: Iterable[int], field: Field = Field.RATIONALS) -> BettiVector:
    """Reduced Betti numbers of the complex generated by the facet bitmasks.

    The complex is first reduced by strong collapses; only the reduced core reaches the
    rank computation. No facets is the void complex, ``[0]`` is ``{∅}``.
    """
    core = _strong_core(facets)
    if core is None:
        return BettiVector()
    return _core_betti(_relabel(core), Field(field))


@lru_cache(maxsize=4096)
def _reduced_betti(complex_: SimplicialComplex, field: Field) -> BettiVector:
    return facet_betti(complex_.facet_masks, field)


def reduced_betti(complex_: SimplicialComplex, field: Field = Field.RATIONALS) -> BettiVector:
    """Return the reduced Betti numbers of the complex over ``field``.

    Cones (a vertex common to all facets) are acyclic and short-circuit to zero; other
    complexes are shrunk by strong collapses before any linear algebra.

    Raises:
        CapacityError: If the complex has more than `homology_max_vertices` vertices
    """
    enforce_limit("vertex count", len(complex_.vertices), "homology_max_vertices")
    return _reduced_betti(complex_, Field(field))


def field_discrepancies(complex_: SimplicialComplex) -> List[int]:
    """Degrees where the QQ and GF(2) Betti numbers differ; logged as a finding when nonempty."""
    rational = reduced_betti(complex_, Field.RATIONALS)
    binary = reduced_betti(complex_, Field.GF2)
    degrees = sorted(set(rational.degrees) | set(binary.degrees))
    differing = [d for d in degrees if rational[d] != binary[d]]
    if differing:
        logger.warning(
            "field discrepancy",
            complex=str(complex_),
            rationals=rational.as_dict(),
            gf2=binary.as_dict(),
        )
    return differing
