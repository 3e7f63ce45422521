"""Homotopy types that are wedges of spheres, as multisets of sphere dimensions."""

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Tuple

from ..exceptions import DomainError, InternalError


@dataclass(frozen=True)
class HomotopyClass:
    """A point or a wedge of spheres.

    ``spheres`` holds sorted ``(dimension, multiplicity)`` pairs with positive
    multiplicities; no pairs means contractible. Dimension -1 stands for ``{∅}`` and
    only ever occurs alone with multiplicity one.
    """

    spheres: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        for dimension, multiplicity in self.spheres:
            if dimension < -1 or multiplicity < 1:
                raise InternalError(f"Invalid sphere entry {dimension}:{multiplicity}")
        if any(d == -1 for d, _ in self.spheres) and self.spheres != ((-1, 1),):
            raise InternalError("A (-1)-sphere cannot be wedged with anything")

    @classmethod
    def point(cls) -> "HomotopyClass":
        return cls()

    @classmethod
    def sphere(cls, dimension: int, multiplicity: int = 1) -> "HomotopyClass":
        return cls.from_mapping({dimension: multiplicity})

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "HomotopyClass":
        return cls(tuple(sorted((d, m) for d, m in mapping.items() if m)))

    @property
    def is_contractible(self) -> bool:
        return not self.spheres

    def as_dict(self) -> Dict[int, int]:
        return dict(self.spheres)

    def multiplicity(self, dimension: int) -> int:
        return self.as_dict().get(dimension, 0)

    def __str__(self) -> str:
        if not self.spheres:
            return "point"
        return " v ".join(
            f"S^{d}" if m == 1 else f"{m}*S^{d}" for d, m in reversed(self.spheres)
        )


def wedge(a: HomotopyClass, b: HomotopyClass) -> HomotopyClass:
    """Multiset union; the point is the identity.

    Raises:
        InternalError: If a (-1)-sphere would meet another nonempty wedge
    """
    if a.is_contractible:
        return b
    if b.is_contractible:
        return a
    merged = a.as_dict()
    for dimension, multiplicity in b.spheres:
        merged[dimension] = merged.get(dimension, 0) + multiplicity
    return HomotopyClass.from_mapping(merged)


def wedge_all(classes: Iterable[HomotopyClass]) -> HomotopyClass:
    result = HomotopyClass.point()
    for item in classes:
        result = wedge(result, item)
    return result


def repeat(a: HomotopyClass, copies: int) -> HomotopyClass:
    """Wedge of ``copies`` copies of ``a``."""
    if copies < 0:
        raise DomainError(f"Cannot wedge {copies} copies")
    return wedge_all(a for _ in range(copies))


def suspend(a: HomotopyClass, times: int = 1) -> HomotopyClass:
    """Shift every sphere dimension up by ``times``; the point stays a point."""
    if times < 0:
        raise DomainError(f"Suspension count must be non-negative, got {times}")
    return HomotopyClass(tuple((d + times, m) for d, m in a.spheres))
