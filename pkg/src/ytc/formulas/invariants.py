"""Closed forms for the invariants of ``I_{n,t}^{[k]}``, its dual and of t-Young complexes."""

from dataclasses import dataclass
from math import comb

from ..exceptions import DomainError
from ..young import Partition
from .chi import chi


def _require_power(n: int, k: int, t: int) -> None:
    if t < 1 or n < 1:
        raise DomainError(f"Need n >= 1 and t >= 1, got n={n}, t={t}")
    if not 1 <= k <= n // t:
        raise DomainError(f"k={k} is outside 1..{n // t} = floor(n/t) for n={n}, t={t}")


def pd_formula(n: int, k: int, t: int) -> int:
    """Projective dimension of ``R/I_{n,t}^{[k]}``.

    For ``t = 1`` the ideal is the squarefree Veronese of degree ``k`` and the value is
    ``n - k + 1``; otherwise it is χ_t(n, k).

    Raises:
        DomainError: If ``k`` is outside ``1..⌊n/t⌋``
    """
    _require_power(n, k, t)
    if t == 1:
        return n - k + 1
    return chi(n, k, t).value


def krull_formula(n: int, k: int, t: int) -> int:
    """Krull dimension ``n - ⌊n/t⌋ + k - 1`` of ``R/I_{n,t}^{[k]}``."""
    _require_power(n, k, t)
    return n - n // t + k - 1


def helly_formula(shape: Partition, t: int) -> int:
    """Helly number ``(r - 1)t - 1`` of the Alexander dual of the t-Young complex.

    A single row gives -1: the dual is void and there is no nonempty minimal nonface.

    Raises:
        DomainError: If the shape is empty or ``t < 1``
    """
    if t < 1:
        raise DomainError(f"t must be a positive integer, got {t}")
    if shape.is_empty:
        raise DomainError("The Helly number needs a nonempty shape")
    return (shape.rows - 1) * t - 1


def leray_formula(n: int, k: int, t: int) -> int:
    """Leray number of ``Δ_{n,t}^{[k]}``, one less than the projective dimension.

    Raises:
        DomainError: If ``n < kt``
    """
    if k < 1 or t < 1:
        raise DomainError(f"Need k >= 1 and t >= 1, got k={k}, t={t}")
    if n < k * t:
        raise DomainError(f"n={n} < kt={k * t}: the dual complex is void")
    return pd_formula(n, k, t) - 1


def regularity_formula(n: int, k: int, t: int) -> int:
    """Castelnuovo–Mumford regularity of ``K[Δ_{n,t}^{[k]}]``, equal to its Leray number."""
    return leray_formula(n, k, t)


def generator_count(n: int, k: int, t: int) -> int:
    """Number of minimal generators of ``I_{n,t}^{[k]}``: ``C(n - k(t - 1), k)``."""
    if k < 0 or t < 1:
        raise DomainError(f"Need k >= 0 and t >= 1, got k={k}, t={t}")
    free = n - k * (t - 1)
    return comb(free, k) if free >= 0 else 0


def vd_characterization(shape: Partition, t: int) -> bool:
    """Whether the t-Young complex of ``shape`` is vertex decomposable.

    True iff ``t = 1``, or the shape has one row, or ``λ2 ≤ t``. For ``t ≥ 2`` this is
    also exactly when it is shellable and when it is Cohen–Macaulay.
    """
    if t < 1:
        raise DomainError(f"t must be a positive integer, got {t}")
    return t == 1 or shape.rows <= 1 or shape.second <= t


@dataclass(frozen=True)
class Linearity:
    linear_quotients: bool
    linear_resolution: bool


def linearity_characterization(n: int, k: int, t: int) -> Linearity:
    """Linear quotients and linear resolution of ``I_{n,t}^{[k]}``.

    For ``t ≥ 2`` both hold exactly when ``kt ≤ n ≤ kt + t``, that is when ``k`` is the
    matching number or the restricted matching number. The squarefree Veronese ideals
    of ``t = 1`` have both properties for every ``k``.
    """
    _require_power(n, k, t)
    if t == 1:
        return Linearity(True, True)
    linear = k * t <= n <= k * t + t
    return Linearity(linear, linear)
