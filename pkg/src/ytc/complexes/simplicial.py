"""Finite abstract simplicial complexes in facet representation.

A complex is stored as its canonically ordered facet list together with a parallel
tuple of integer bitmasks (bit ``v`` set for vertex ``v``) used for subset tests.
The empty complex comes in two flavours that must never be confused:

* ``Status.VOID`` has no faces at all.
* ``Status.IRRELEVANT`` is ``{∅}``, whose reduced homology is nonzero in degree -1.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

from ..core.config import enforce_limit
from ..exceptions import DomainError

Face = Tuple[int, ...]


class Status(str, Enum):
    """Emptiness status of a complex."""

    VOID = "void"
    IRRELEVANT = "irrelevant"
    PROPER = "proper"


def make_face(vertices: Iterable[int]) -> Face:
    """Normalize an iterable of vertex ids into a sorted, duplicate-free face.

    Raises:
        DomainError: If a vertex id is negative or not an integer
    """
    items = set()
    for v in vertices:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise DomainError(f"Vertex ids must be non-negative integers, got {v!r}")
        items.add(v)
    return tuple(sorted(items))


def face_mask(face: Iterable[int]) -> int:
    mask = 0
    for v in face:
        mask |= 1 << v
    return mask


def mask_face(mask: int) -> Face:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the single-bit masks of ``mask`` from lowest to highest."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def iter_submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask``, ``mask`` itself first and 0 last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def canonical_order(faces: Iterable[Face]) -> List[Face]:
    """Sort faces by size, then lexicographically."""
    return sorted(faces, key=lambda f: (len(f), f))


@dataclass(frozen=True)
class SimplicialComplex:
    """Immutable simplicial complex.

    Attributes:
        status: Void, Irrelevant or Proper
        facets: Canonically ordered facets (``((),)`` for Irrelevant, empty for Void)
        universe: Optional explicit vertex universe, carried for duality only
    """

    status: Status
    facets: Tuple[Face, ...]
    universe: Optional[FrozenSet[int]] = field(default=None, compare=False)

    @classmethod
    def void(cls, universe: Optional[Iterable[int]] = None) -> "SimplicialComplex":
        return cls(Status.VOID, (), _freeze(universe))

    @classmethod
    def irrelevant(cls, universe: Optional[Iterable[int]] = None) -> "SimplicialComplex":
        return cls(Status.IRRELEVANT, ((),), _freeze(universe))

    @classmethod
    def simplex(cls, vertices: Iterable[int]) -> "SimplicialComplex":
        return from_facets([vertices])

    @property
    def is_void(self) -> bool:
        return self.status is Status.VOID

    @property
    def is_irrelevant(self) -> bool:
        return self.status is Status.IRRELEVANT

    @property
    def is_proper(self) -> bool:
        return self.status is Status.PROPER

    @cached_property
    def facet_masks(self) -> Tuple[int, ...]:
        return tuple(face_mask(f) for f in self.facets)

    @cached_property
    def vertex_mask(self) -> int:
        mask = 0
        for m in self.facet_masks:
            mask |= m
        return mask

    @property
    def vertices(self) -> Face:
        return mask_face(self.vertex_mask)

    @property
    def dimension(self) -> Optional[int]:
        """Largest facet dimension; None for the void complex."""
        if self.is_void:
            return None
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @property
    def is_simplex(self) -> bool:
        return self.is_proper and len(self.facets) == 1

    def contains_face(self, face: Iterable[int]) -> bool:
        mask = face_mask(face)
        return any(mask & m == mask for m in self.facet_masks)

    @cached_property
    def face_masks(self) -> FrozenSet[int]:
        """Every face as a bitmask (empty for Void, ``{0}`` for Irrelevant)."""
        faces = set()
        for m in self.facet_masks:
            if m in faces:
                continue
            faces.update(iter_submasks(m))
        return frozenset(faces)

    def faces(self) -> List[Face]:
        return canonical_order(mask_face(m) for m in self.face_masks)

    def f_vector(self) -> List[int]:
        """Face counts ``[f_-1, f_0, ..., f_d]``; empty for Void."""
        if self.is_void:
            return []
        counts = [0] * (max(len(f) for f in self.facets) + 1)
        for m in self.face_masks:
            counts[popcount(m)] += 1
        return counts

    def reduced_euler_characteristic(self) -> int:
        """Alternating face count, the empty face included."""
        return sum((-1) ** (size - 1) * count for size, count in enumerate(self.f_vector()))

    def with_universe(self, universe: Iterable[int]) -> "SimplicialComplex":
        frozen = frozenset(universe)
        if not set(self.vertices) <= frozen:
            raise DomainError(f"Vertex set {list(self.vertices)} is not inside the universe")
        return SimplicialComplex(self.status, self.facets, frozen)

    def __str__(self) -> str:
        if self.is_void:
            return "void"
        if self.is_irrelevant:
            return "irrelevant"
        return "<" + ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets) + ">"


def _freeze(universe: Optional[Iterable[int]]) -> Optional[FrozenSet[int]]:
    return None if universe is None else frozenset(universe)


def from_facets(
    candidates: Iterable[Iterable[int]], universe: Optional[Iterable[int]] = None
) -> SimplicialComplex:
    """Build the complex generated by the inclusion-maximal candidates.

    Args:
        candidates: Faces in any order, possibly dominated or repeated
        universe: Optional explicit vertex universe

    Returns:
        Void for no candidates, Irrelevant when only the empty face is given,
        otherwise the Proper complex in canonical facet order.

    Raises:
        CapacityError: If more than `max_vertices` distinct vertices appear
        DomainError: If a vertex lies outside an explicit universe
    """
    masks = {face_mask(make_face(c)) for c in candidates}
    frozen = _freeze(universe)
    if not masks:
        return SimplicialComplex.void(frozen)

    vertex_mask = 0
    for m in masks:
        vertex_mask |= m
    enforce_limit("vertex count", popcount(vertex_mask), "max_vertices")
    if frozen is not None and vertex_mask & ~face_mask(frozen):
        raise DomainError("Facet vertices must lie inside the universe")
    if masks == {0}:
        return SimplicialComplex.irrelevant(frozen)

    kept: List[int] = []
    for m in sorted(masks, key=popcount, reverse=True):
        if not any(m & k == m for k in kept):
            kept.append(m)
    facets = tuple(canonical_order(mask_face(m) for m in kept))
    return SimplicialComplex(Status.PROPER, facets, frozen)

