"""Sphere dimensions that the homotopy type of ``Δ_{n,t}^{[k]}`` is forced to contain."""

from typing import Optional

from ..exceptions import DomainError
from ..formulas import ChiRegime, chi


def top_homology_witness(n: int, k: int, t: int) -> Optional[int]:
    """Dimension ``l - 1`` carrying homology when ``k > t`` and ``t < l = n - kt ≤ k``.

    None outside that window.
    """
    if k < 1 or t < 1:
        raise DomainError(f"Need k >= 1 and t >= 1, got k={k}, t={t}")
    l = n - k * t  # noqa: E741
    if k > t and t < l <= k:
        return l - 1
    return None


def lower_bound_degree(n: int, k: int, t: int) -> Optional[int]:
    """The degree ``pd - 2`` in which the dual complex itself has nonzero reduced homology.

    Defined in the linear regime and when ``n > k(t+1)`` with ``n ≡ 0`` or ``n ≡ t``
    modulo ``t + 1``; None for the other residues, where the nonvanishing Betti number
    sits on a proper induced subcomplex.

    Raises:
        DomainError: If ``n < kt``
    """
    value = chi(n, k, t) if n >= 0 else None
    if value is None or value.regime is ChiRegime.ZERO:
        raise DomainError(f"n={n} < kt={k * t}: the dual complex is void")
    if t == 1:
        return n - k - 1
    if value.regime is ChiRegime.LINEAR:
        return n - k * t - 1
    if value.regime is ChiRegime.RESIDUE_T or n % (t + 1) == 0:
        return value.value - 2
    return None
