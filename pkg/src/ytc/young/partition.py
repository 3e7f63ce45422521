"""Integer partitions used as Young diagram shapes."""

from dataclasses import dataclass
from typing import Iterable, Tuple

from ..exceptions import DomainError, PartitionParseError


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; ``parts == ()`` is the empty shape.

    Zero parts are trimmed at construction, so the all-zero shape and the empty
    shape are the same value.
    """

    parts: Tuple[int, ...]

    def __init__(self, parts: Iterable[int]) -> None:
        values = tuple(parts)
        for index, part in enumerate(values):
            if isinstance(part, bool) or not isinstance(part, int) or part < 0:
                raise DomainError(f"Partition part {index + 1} must be a non-negative integer")
        for index in range(1, len(values)):
            if values[index] > values[index - 1]:
                raise DomainError(
                    f"Partition parts must be weakly decreasing; part {index + 1} "
                    f"({values[index]}) exceeds part {index} ({values[index - 1]})"
                )
        object.__setattr__(self, "parts", tuple(p for p in values if p > 0))

    @property
    def is_empty(self) -> bool:
        return not self.parts

    @property
    def rows(self) -> int:
        return len(self.parts)

    @property
    def cells(self) -> int:
        return sum(self.parts)

    @property
    def first(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def second(self) -> int:
        return self.parts[1] if len(self.parts) > 1 else 0

    def capped(self, bound: int) -> "Partition":
        """Every part replaced by ``min(bound, part)``; nonpositive bounds give the empty shape."""
        return Partition(min(max(bound, 0), p) for p in self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts such as ``"5,4,2"``.

    Raises:
        PartitionParseError: On empty items, non-integers, negative or increasing parts;
            the message names the 1-based index of the offending part.
    """
    items = text.split(",")
    values = []
    for index, item in enumerate(items, start=1):
        item = item.strip()
        if not item or not item.lstrip("-").isdigit():
            raise PartitionParseError(f"Partition part {index} is not an integer: {item!r}", index)
        value = int(item)
        if value < 0:
            raise PartitionParseError(f"Partition part {index} is negative: {value}", index)
        if values and value > values[-1]:
            raise PartitionParseError(
                f"Partition is not weakly decreasing at part {index}: {value} > {values[-1]}",
                index,
            )
        values.append(value)
    return Partition(values)


def partitions_of(cells: int, max_part: int = 0) -> Iterable[Partition]:
    """Yield every partition of ``cells`` with parts at most ``max_part`` (0 means no cap)."""
    cap = max_part or cells

    def build(remaining: int, bound: int, prefix: Tuple[int, ...]) -> Iterable[Tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(bound, remaining), 0, -1):
            yield from build(remaining - part, part, prefix + (part,))

    for parts in build(cells, cap, ()):
        yield Partition(parts)


def partitions_up_to(max_cells: int) -> Iterable[Partition]:
    """Yield every nonempty partition with at most ``max_cells`` cells, smallest first."""
    for cells in range(1, max_cells + 1):
        yield from partitions_of(cells)
