"""Homotopy types of t-Young complexes and of the duals of squarefree path-ideal powers.

Both computations are symbolic. The Young recursion splits a shape with equal first
two parts into the shape without its top row, a suspension of the shape capped at
``λ1 - 1``, and, when ``λ1 > t``, a double suspension of the shape capped at
``λ1 - t - 1``. The dual side either closes with a binomial wedge or sums leaf types
over the reduction graph.
"""

from functools import lru_cache
from math import comb
from typing import Tuple

import structlog

from ..exceptions import DomainError, PreconditionError
from ..young import Partition
from .graph import build_reduction_graph
from .wedge import HomotopyClass, repeat, suspend, wedge, wedge_all

logger = structlog.get_logger()

EMPTY_SPHERE = HomotopyClass.sphere(-1)


def _cap(parts: Tuple[int, ...], bound: int) -> Tuple[int, ...]:
    return Partition(parts).capped(bound).parts


@lru_cache(maxsize=4096)
def _young_homotopy(parts: Tuple[int, ...], t: int) -> HomotopyClass:
    if not parts:
        return EMPTY_SPHERE
    r = len(parts)
    first = parts[0]
    if r == 1 or first > parts[1]:
        return HomotopyClass.point()
    if first == 1:
        return HomotopyClass.sphere(0, r - 1)

    result = wedge(
        _young_homotopy(parts[1:], t),
        suspend(_young_homotopy(_cap(parts[1:], first - 1), t), 1),
    )
    if first > t:
        result = wedge(result, suspend(_young_homotopy(_cap(parts, first - t - 1), t), 2))
    return result


def young_homotopy(shape: Partition, t: int) -> HomotopyClass:
    """Return the homotopy type of the t-Young complex of ``shape``.

    Example:
        ```python
        assert young_homotopy(Partition((3, 3, 3, 3)), 2).as_dict() == {1: 3, 2: 1}
        ```
    """
    if t < 1:
        raise DomainError(f"t must be a positive integer, got {t}")
    return _young_homotopy(shape.parts, t)


def binomial_wedge(n: int, k: int, t: int) -> HomotopyClass:
    """Homotopy type of the dual complex when ``n = kt + l`` with ``1 ≤ l ≤ t``.

    It is a wedge of ``C(k, l)`` spheres of dimension ``l - 1``, and a point once ``k < l``.

    Raises:
        PreconditionError: If ``l`` is outside ``[1, t]``
    """
    l = n - k * t  # noqa: E741
    if not 1 <= l <= t:
        raise PreconditionError(f"Need 1 <= n - kt <= t, got n - kt = {l} with t = {t}")
    if k < l:
        return HomotopyClass.point()
    return HomotopyClass.sphere(l - 1, comb(k, l))


def _leaf_homotopy(m: int, j: int, t: int) -> HomotopyClass:
    if j == 0:
        return HomotopyClass.point()
    if m == j * t:
        return EMPTY_SPHERE
    return binomial_wedge(m, j, t)


@lru_cache(maxsize=1024)
def dual_homotopy(n: int, k: int, t: int) -> HomotopyClass:
    """Homotopy type of the Alexander dual of the k-th squarefree power of the t-path ideal of P_n.

    Raises:
        DomainError: If ``n < kt`` (the ideal is zero and the dual is void)
    """
    if t < 1 or k < 0 or n < 0:
        raise DomainError(f"Need n >= 0, k >= 0 and t >= 1, got n={n}, k={k}, t={t}")
    if n < k * t:
        raise DomainError(f"n={n} < kt={k * t}: the ideal is zero, dual is void")
    if n == k * t:
        return EMPTY_SPHERE
    if k == 0:
        return HomotopyClass.point()
    if n - k * t <= t:
        return binomial_wedge(n, k, t)

    graph = build_reduction_graph(n, k, t)
    pieces = [
        repeat(suspend(_leaf_homotopy(*pc.leaf, t), pc.label_sum), pc.count)
        for pc in graph.path_label_counts()
    ]
    result = wedge_all(pieces)
    logger.debug("dual homotopy", n=n, k=k, t=t, leaves=len(pieces), result=str(result))
    return result
