"""The piecewise function χ_t(n, k) that gives the projective dimension of ``R/I_{n,t}^{[k]}``."""

from dataclasses import dataclass
from enum import Enum

from ..exceptions import DomainError


class ChiRegime(str, Enum):
    ZERO = "zero"
    LINEAR = "linear"
    RESIDUE_D = "residue-d"
    RESIDUE_T = "residue-t"


@dataclass(frozen=True)
class ChiValue:
    regime: ChiRegime
    value: int

    def __int__(self) -> int:
        return self.value


def chi(n: int, k: int, t: int) -> ChiValue:
    """Evaluate χ_t(n, k), tagged with the case that produced it.

    * ``n < kt``: 0
    * ``kt ≤ n ≤ k(t+1)``: ``n - kt + 1``
    * ``n > k(t+1)`` and ``n ≡ d (mod t+1)`` with ``d ≤ t - 1``: ``2(n-d)/(t+1) - k + 1``
    * ``n > k(t+1)`` and ``n ≡ t (mod t+1)``: ``2(n+1)/(t+1) - k``

    Raises:
        DomainError: Unless ``n ≥ 0``, ``k ≥ 1`` and ``t ≥ 1``
    """
    if n < 0 or k < 1 or t < 1:
        raise DomainError(f"chi needs n >= 0, k >= 1 and t >= 1, got n={n}, k={k}, t={t}")
    if n < k * t:
        return ChiValue(ChiRegime.ZERO, 0)
    if n <= k * (t + 1):
        return ChiValue(ChiRegime.LINEAR, n - k * t + 1)
    d = n % (t + 1)
    if d == t:
        return ChiValue(ChiRegime.RESIDUE_T, 2 * (n + 1) // (t + 1) - k)
    return ChiValue(ChiRegime.RESIDUE_D, 2 * (n - d) // (t + 1) - k + 1)
