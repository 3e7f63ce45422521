"""Transversals of hypergraphs given as bitmask edges.

Minimal nonfaces, Stanley–Reisner facets and ideal heights all reduce to hitting
sets of a small hypergraph, so the search lives here once.
"""

from typing import Dict, Iterable, List, Sequence, Tuple

from .simplicial import iter_bits, popcount


def _minimal_edges(edges: Iterable[int]) -> List[int]:
    ordered = sorted(set(edges), key=lambda e: (popcount(e), e))
    kept: List[int] = []
    for e in ordered:
        if not any(f & e == f for f in kept):
            kept.append(e)
    return kept


def _has_private_edges(chosen: int, edges: Sequence[int]) -> bool:
    """True when every chosen vertex is the only chosen vertex on some edge."""
    private = 0
    for e in edges:
        hit = e & chosen
        if hit and hit & (hit - 1) == 0:
            private |= hit
    return private == chosen


def minimal_transversals(edges: Iterable[int]) -> List[int]:
    """Enumerate the inclusion-minimal vertex sets meeting every edge.

    Branches on the smallest unhit edge. A partial set in which some vertex already
    lacks a private edge can never become minimal, and neither can a superset of a
    transversal found earlier; both are cut.

    Args:
        edges: Edges as bitmasks

    Returns:
        Minimal transversals as bitmasks, in discovery order. An empty edge admits
        no transversal; an empty hypergraph has the empty set as its only one.
    """
    kept = _minimal_edges(edges)
    if not kept:
        return [0]
    if kept[0] == 0:
        return []

    found: List[int] = []

    def extend(chosen: int) -> None:
        for t in found:
            if t & chosen == t:
                return
        if not _has_private_edges(chosen, kept):
            return
        unhit = next((e for e in kept if not e & chosen), None)
        if unhit is None:
            found.append(chosen)
            return
        for bit in iter_bits(unhit):
            extend(chosen | bit)

    extend(0)
    return found


def _packing_bound(edges: Sequence[int]) -> int:
    """Size of a greedy family of pairwise disjoint edges, a lower bound on any transversal."""
    used = 0
    count = 0
    for e in edges:
        if not e & used:
            used |= e
            count += 1
    return count


def _greedy_transversal(edges: Sequence[int]) -> int:
    chosen = 0
    remaining = list(edges)
    while remaining:
        counts: Dict[int, int] = {}
        for e in remaining:
            for bit in iter_bits(e):
                counts[bit] = counts.get(bit, 0) + 1
        best = max(sorted(counts), key=lambda b: counts[b])
        chosen |= best
        remaining = [e for e in remaining if not e & best]
    return chosen


def minimum_transversal(edges: Iterable[int]) -> Tuple[int, int]:
    """Return ``(size, mask)`` of a smallest transversal by branch and bound.

    The incumbent starts from a greedy cover; nodes whose size plus a disjoint-edge
    packing bound cannot beat it are cut.

    Raises:
        ValueError: If some edge is empty
    """
    kept = _minimal_edges(edges)
    if not kept:
        return 0, 0
    if kept[0] == 0:
        raise ValueError("An empty edge cannot be hit")

    best_mask = _greedy_transversal(kept)
    best = [popcount(best_mask), best_mask]

    def search(chosen: int, size: int) -> None:
        unhit = [e for e in kept if not e & chosen]
        if not unhit:
            if size < best[0]:
                best[0], best[1] = size, chosen
            return
        if size + _packing_bound(unhit) >= best[0]:
            return
        for bit in iter_bits(unhit[0]):
            search(chosen | bit, size + 1)

    search(0, 0)
    return best[0], best[1]
