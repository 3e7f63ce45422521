"""Squarefree powers of the t-path ideal of the path graph P_n.

The generators of ``I_{n,t}`` are the products of ``t`` consecutive variables. A
generator of the k-th squarefree power is the product over a k-matching: ``k`` pairwise
disjoint windows ``[b, b + t - 1]`` inside ``[n]``. Different matchings have different
supports of the same size ``kt``, so the supports form a minimal generating set.
"""

from dataclasses import dataclass
from typing import Iterator, List, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..complexes import Face, face_mask
from ..exceptions import DomainError

logger = structlog.get_logger()


class PathIdealSpec(BaseModel):
    """The triple ``(n, t, k)`` naming ``I_{n,t}^{[k]}``.

    Attributes:
        n: Vertex count of P_n
        t: Vertices per path
        k: Squarefree power

    Example:
        ```python
        spec = PathIdealSpec(n=9, t=2, k=3)
        assert spec.nu == 4 and spec.is_nonzero
        ```
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Vertex count of the path")
    t: int = Field(..., ge=1, description="Vertices per generator path")
    k: int = Field(..., ge=0, description="Squarefree power")

    @classmethod
    def of(cls, n: int, t: int, k: int) -> "PathIdealSpec":
        """Validate and build a spec, reporting bad values as `DomainError`."""
        try:
            return cls(n=n, t=t, k=k)
        except ValidationError as e:
            problems = "; ".join(
                f"{'.'.join(map(str, err['loc']))}: {err['msg']}" for err in e.errors()
            )
            raise DomainError(f"Invalid path ideal (n={n}, t={t}, k={k}): {problems}") from e

    @property
    def nu(self) -> int:
        """Matching number ``⌊n/t⌋``."""
        return self.n // self.t

    @property
    def is_nonzero(self) -> bool:
        return 1 <= self.k <= self.nu

    @property
    def vertices(self) -> Face:
        return tuple(range(1, self.n + 1))

    def require_nonzero(self) -> None:
        """Raise `DomainError` unless ``1 ≤ k ≤ ⌊n/t⌋``."""
        if not self.is_nonzero:
            raise DomainError(
                f"k={self.k} is outside 1..{self.nu} = floor(n/t) for n={self.n}, t={self.t}"
            )

    def __str__(self) -> str:
        return f"I_{{{self.n},{self.t}}}^[{self.k}]"


@dataclass(frozen=True)
class Matching:
    """``k`` disjoint windows of ``t`` consecutive vertices, given by their left ends."""

    t: int
    starts: Tuple[int, ...]

    @property
    def intervals(self) -> List[Tuple[int, int]]:
        return [(b, b + self.t - 1) for b in self.starts]

    @property
    def support(self) -> Face:
        return tuple(v for b in self.starts for v in range(b, b + self.t))


@dataclass(frozen=True)
class MonomialSet:
    """Supports of the minimal generators of ``I_{n,t}^{[k]}``, in lexicographic order."""

    n: int
    t: int
    k: int
    supports: Tuple[Face, ...]

    @property
    def masks(self) -> List[int]:
        return [face_mask(s) for s in self.supports]

    def __len__(self) -> int:
        return len(self.supports)


def _window_starts(first: int, last_end: int, t: int, count: int) -> Iterator[Tuple[int, ...]]:
    if count == 0:
        yield ()
        return
    for b in range(first, last_end - count * t + 2):
        for rest in _window_starts(b + t, last_end, t, count - 1):
            yield (b,) + rest


def matchings(spec: PathIdealSpec) -> Iterator[Matching]:
    """Yield every k-matching of t-windows in ``[n]``, ordered by left ends.

    Example:
        ```python
        assert [m.starts for m in matchings(PathIdealSpec(n=5, t=2, k=2))] == [
            (1, 3), (1, 4), (2, 4)
        ]
        ```
    """
    for starts in _window_starts(1, spec.n, spec.t, spec.k):
        yield Matching(spec.t, starts)


def squarefree_power_generators(spec: PathIdealSpec) -> MonomialSet:
    """Return the generator supports of ``I_{n,t}^{[k]}``; empty once ``k > ⌊n/t⌋``.

    Raises:
        DomainError: If ``k = 0``
    """
    if spec.k < 1:
        raise DomainError("The squarefree power index k must be at least 1")
    supports = tuple(m.support for m in matchings(spec))
    logger.debug("path ideal generators", spec=str(spec), generators=len(supports))
    return MonomialSet(spec.n, spec.t, spec.k, supports)


def matching_numbers(n: int, t: int) -> Tuple[int, int]:
    """Return ``(ν, ν0) = (⌊n/t⌋, ⌊(n-1)/t⌋)`` for the path ideal of P_n.

    Raises:
        DomainError: If ``n < t`` or ``t < 1``
    """
    if t < 1 or n < t:
        raise DomainError(f"Matching numbers need n >= t >= 1, got n={n}, t={t}")
    return n // t, (n - 1) // t


def max_matching_size(n: int, t: int) -> int:
    """Largest k with a k-matching, found by enumeration."""
    if t < 1 or n < 1:
        raise DomainError(f"Need n >= 1 and t >= 1, got n={n}, t={t}")
    k = 0
    while next(iter(matchings(PathIdealSpec(n=n, t=t, k=k + 1))), None) is not None:
        k += 1
    return k
