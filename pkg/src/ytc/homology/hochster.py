"""Graded Betti tables of Stanley–Reisner rings through Hochster's formula.

For a complex on the universe ``U`` the multigraded Betti number of ``K[Δ]`` in
homological index ``i`` and squarefree degree ``σ ⊆ U`` is the reduced Betti number of
the induced subcomplex on ``σ`` in degree ``|σ| - i - 1``. Projective dimension,
regularity and the Leray number are all read off the same sweep over ``σ``.

An induced subcomplex is a cone, hence acyclic, as soon as ``σ`` has a vertex that lies
in no minimal nonface inside ``σ``; those subsets are skipped without any linear algebra.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

import structlog

from ..complexes import Face, SimplicialComplex, face_mask, make_face, mask_face, popcount
from ..complexes.simplicial import iter_bits, iter_submasks
from ..core.config import enforce_limit
from ..exceptions import DomainError
from .chains import BettiVector, Field, facet_betti

logger = structlog.get_logger()


@dataclass(frozen=True)
class GradedBettiTable:
    """Nonzero multigraded Betti numbers of ``K[Δ]``.

    Attributes:
        universe: The ambient vertex set ``U``
        entries: ``(i, σ, β_{i,σ})`` triples sorted by ``i``, then ``|σ|``, then ``σ``
    """

    universe: Face
    entries: Tuple[Tuple[int, Face, int], ...]

    def beta(self, i: int, sigma: Iterable[int]) -> int:
        key = make_face(sigma)
        for index, face, value in self.entries:
            if index == i and face == key:
                return value
        return 0

    def total(self, i: int) -> int:
        """Total Betti number ``β_i``."""
        return sum(value for index, _, value in self.entries if index == i)

    def top_slice(self) -> Dict[int, int]:
        """``i -> β_{i,U}`` for the full universe."""
        return {i: value for i, face, value in self.entries if face == self.universe}

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _, _ in self.entries)

    @property
    def regularity(self) -> int:
        return max(len(face) - i for i, face, _ in self.entries)


def _nonface_cover(faces: FrozenSet[int], universe: int) -> List[int]:
    """Minimal nonfaces inside ``universe``, found by scanning every subset."""
    minimal = []
    for candidate in iter_submasks(universe):
        if candidate in faces:
            continue
        if all(candidate ^ bit in faces for bit in iter_bits(candidate)):
            minimal.append(candidate)
    return minimal


@lru_cache(maxsize=512)
def _sweep(
    complex_: SimplicialComplex, full: int, field: Field
) -> Tuple[Tuple[int, BettiVector], ...]:
    nonfaces = _nonface_cover(complex_.face_masks, full)
    found: List[Tuple[int, BettiVector]] = []
    visited = skipped = 0
    for sigma in iter_submasks(full):
        covered = 0
        for n in nonfaces:
            if n & sigma == n:
                covered |= n
        if covered != sigma:
            skipped += 1
            continue
        visited += 1
        betti = facet_betti([facet & sigma for facet in complex_.facet_masks], field)
        if not betti.is_zero:
            found.append((sigma, betti))
    logger.debug(
        "hochster sweep", universe=popcount(full), visited=visited, skipped_cones=skipped
    )
    return tuple(found)


def induced_homology(
    complex_: SimplicialComplex, universe: Iterable[int], field: Field = Field.RATIONALS
) -> Iterator[Tuple[int, BettiVector]]:
    """Yield ``(σ, reduced Betti of Δ|σ)`` for every σ ⊆ universe with nonzero homology.

    The sweep is cached per complex, universe and field, so projective dimension,
    regularity and the Leray number of one complex share a single pass.

    Raises:
        CapacityError: If the universe exceeds `hochster_max_universe`
        DomainError: If the complex is void or not inside the universe
    """
    ground = make_face(universe)
    enforce_limit("universe size", len(ground), "hochster_max_universe")
    if complex_.is_void:
        raise DomainError("The void complex has no Stanley–Reisner ring")
    full = face_mask(ground)
    if complex_.vertex_mask & ~full:
        raise DomainError("The vertex set of the complex is not inside the universe")
    yield from _sweep(complex_, full, Field(field))


def hochster_table(
    complex_: SimplicialComplex, universe: Iterable[int], field: Field = Field.RATIONALS
) -> GradedBettiTable:
    """Return the full multigraded Betti table of ``K[Δ]`` over ``universe``.

    Example:
        ```python
        sphere = from_facets([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])
        table = hochster_table(sphere, [1, 2, 3, 4])
        assert table.beta(1, [1, 2, 3, 4]) == 1
        ```
    """
    ground = make_face(universe)
    entries = []
    for sigma, betti in induced_homology(complex_, ground, field):
        size = popcount(sigma)
        for degree, value in betti.values:
            entries.append((size - degree - 1, mask_face(sigma), value))
    entries.sort(key=lambda e: (e[0], len(e[1]), e[1]))
    return GradedBettiTable(ground, tuple(entries))


def pd_oracle(
    complex_: SimplicialComplex, universe: Iterable[int], field: Field = Field.RATIONALS
) -> int:
    """Projective dimension of ``K[Δ]``: the largest homological index with a nonzero entry."""
    return hochster_table(complex_, universe, field).projective_dimension


def regularity_oracle(
    complex_: SimplicialComplex, universe: Iterable[int], field: Field = Field.RATIONALS
) -> int:
    """Castelnuovo–Mumford regularity of ``K[Δ]``: the largest ``|σ| - i`` with nonzero β."""
    return hochster_table(complex_, universe, field).regularity


def leray_oracle(
    complex_: SimplicialComplex, universe: Iterable[int], field: Field = Field.RATIONALS
) -> int:
    """One more than the top degree of nonvanishing homology over all induced subcomplexes."""
    top = -1
    for _, betti in induced_homology(complex_, universe, field):
        if betti.values:
            top = max(top, betti.values[-1][0])
    return top + 1
