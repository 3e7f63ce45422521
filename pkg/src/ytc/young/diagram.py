"""The t-filling of a Young diagram and the t-Young complex built from it.

Row ``j`` (counted from the top, ``1 ≤ j ≤ r``) of the diagram of ``λ`` is filled with
the consecutive integers ``(r - j)t + 1, …, (r - j)t + λ_j``. A facet of the t-Young
complex picks one entry from every column, strictly increasing from left to right.
Cells carrying the same integer are the same vertex.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import networkx as nx
import structlog

from ..complexes import SimplicialComplex, from_facets
from ..exceptions import DomainError, PreconditionError
from .partition import Partition

logger = structlog.get_logger()


@dataclass(frozen=True)
class YoungFilling:
    """Entries of the t-filled diagram.

    Attributes:
        t: Row offset
        rows: Entry list of each row, top row first
    """

    t: int
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        """Distinct entries of each column in ascending order."""
        width = len(self.rows[0]) if self.rows else 0
        return tuple(
            tuple(sorted({row[c] for row in self.rows if len(row) > c})) for c in range(width)
        )

    @property
    def entries(self) -> Tuple[int, ...]:
        return tuple(sorted({e for row in self.rows for e in row}))

    @property
    def universe(self) -> Tuple[int, ...]:
        """``1, …, (r - 1)t + λ1``: every label up to the largest entry, gaps included."""
        if not self.rows:
            return ()
        return tuple(range(1, (len(self.rows) - 1) * self.t + len(self.rows[0]) + 1))


def _require_t(t: int) -> None:
    if t < 1:
        raise DomainError(f"t must be a positive integer, got {t}")


def young_filling(shape: Partition, t: int) -> YoungFilling:
    _require_t(t)
    r = shape.rows
    rows = tuple(
        tuple((r - j) * t + i for i in range(1, part + 1))
        for j, part in enumerate(shape.parts, start=1)
    )
    return YoungFilling(t, rows)


@lru_cache(maxsize=1024)
def young_complex(shape: Partition, t: int) -> SimplicialComplex:
    """Return the t-Young complex of ``shape``; the empty shape gives ``{∅}``.

    Facets are generated column by column with ascending candidates, so they come out
    in canonical order.

    Example:
        ```python
        complex_ = young_complex(Partition((5, 4, 2)), 3)
        assert complex_.facets[0] == (1, 2, 6, 7, 11)
        ```
    """
    filling = young_filling(shape, t)
    if shape.is_empty:
        return SimplicialComplex.irrelevant()
    columns = filling.columns
    facets: List[Tuple[int, ...]] = []

    def extend(prefix: Tuple[int, ...]) -> None:
        c = len(prefix)
        if c == len(columns):
            facets.append(prefix)
            return
        floor = prefix[-1] if prefix else 0
        for entry in columns[c]:
            if entry > floor:
                extend(prefix + (entry,))

    extend(())
    logger.debug("young complex", shape=str(shape), t=t, facets=len(facets))
    return from_facets(facets)


def column_poset(shape: Partition, t: int) -> "nx.DiGraph":
    """Hasse diagram of the column poset: ``x -> y`` when ``x < y`` in adjacent columns.

    Raises:
        PreconditionError: If two cells share an entry (second part larger than t)
    """
    filling = young_filling(shape, t)
    if shape.rows > 1 and shape.second > t:
        raise PreconditionError(
            f"The column poset needs the second part ({shape.second}) to be at most t ({t})"
        )
    graph = nx.DiGraph()
    columns = filling.columns
    for c, column in enumerate(columns):
        for entry in column:
            graph.add_node(entry, column=c + 1)
    for c in range(len(columns) - 1):
        for x in columns[c]:
            for y in columns[c + 1]:
                if x < y:
                    graph.add_edge(x, y)
    return graph


def order_complex_presentation(shape: Partition, t: int) -> SimplicialComplex:
    """Build the complex from the maximal chains of the column poset.

    Only chains meeting every column are kept, which for this poset is all of them.

    Raises:
        PreconditionError: If the second part exceeds ``t``
    """
    graph = column_poset(shape, t)
    if shape.is_empty:
        return SimplicialComplex.irrelevant()
    sources = sorted(n for n in graph if graph.in_degree(n) == 0)
    sinks = sorted(n for n in graph if graph.out_degree(n) == 0)
    chains = []
    for source in sources:
        for sink in sinks:
            if source == sink:
                chains.append([source])
                continue
            chains.extend(nx.all_simple_paths(graph, source, sink))
    full = [chain for chain in chains if len(chain) == shape.first]
    if len(full) != len(chains):
        logger.debug("short chains dropped", shape=str(shape), t=t, dropped=len(chains) - len(full))
    return from_facets(full)


def identified_partition(n: int, k: int, t: int) -> Partition:
    """The rectangle ``(n - kt)^(k+1)`` whose t-Young complex is the dual of ``I_{n,t}^{[k]}``."""
    if n <= k * t:
        raise DomainError(f"No rectangle for n={n} <= kt={k * t}")
    return Partition([n - k * t] * (k + 1))
