"""Shedding vertices and the vertex-decomposability search."""

from functools import lru_cache
from typing import Dict, List, Tuple

import structlog

from ..complexes import Face, SimplicialComplex, deletion, from_facets, link
from ..core.config import enforce_limit
from ..exceptions import DomainError
from .certificate import DecompCertificate, DecompKind, Obstruction, VDNode

logger = structlog.get_logger()

Key = Tuple[Face, ...]


def shedding_vertices(complex_: SimplicialComplex) -> List[int]:
    """Vertices ``x`` such that every facet of ``del(x)`` is a facet of the complex, ascending.

    Raises:
        DomainError: If the complex is void or ``{∅}``
    """
    if not complex_.is_proper:
        raise DomainError(f"Shedding vertices need a complex with vertices, got {complex_}")
    facets = set(complex_.facets)
    return [x for x in complex_.vertices if set(deletion(complex_, x).facets) <= facets]


def _canonical(complex_: SimplicialComplex) -> Key:
    """Facets after relabeling vertices 0, 1, … in order of first appearance."""
    labels: Dict[int, int] = {}
    for facet in complex_.facets:
        for v in facet:
            labels.setdefault(v, len(labels))
    return from_facets([labels[v] for v in f] for f in complex_.facets).facets


def _is_base(complex_: SimplicialComplex) -> bool:
    return complex_.is_irrelevant or complex_.is_simplex


@lru_cache(maxsize=65536)
def _decide(key: Key) -> bool:
    complex_ = from_facets(key)
    if _is_base(complex_):
        return True
    for x in shedding_vertices(complex_):
        if _decide(_canonical(link(complex_, [x]))) and _decide(_canonical(deletion(complex_, x))):
            return True
    return False


def _decomposable(complex_: SimplicialComplex) -> bool:
    return _decide(_canonical(complex_))


def _tree(complex_: SimplicialComplex) -> VDNode:
    if _is_base(complex_):
        return VDNode()
    for x in shedding_vertices(complex_):
        lk, dl = link(complex_, [x]), deletion(complex_, x)
        if _decomposable(lk) and _decomposable(dl):
            return VDNode(x, _tree(lk), _tree(dl))
    raise AssertionError("tree requested for a complex that is not vertex decomposable")


def _obstruction(complex_: SimplicialComplex) -> Obstruction:
    level = 0
    current = complex_
    while True:
        candidates = shedding_vertices(current)
        if not candidates:
            return Obstruction(level, current.facets)
        x = candidates[0]
        lk = link(current, [x])
        current = lk if not _decomposable(lk) else deletion(current, x)
        level += 1


def is_vertex_decomposable(complex_: SimplicialComplex) -> DecompCertificate:
    """Decide vertex decomposability and return a certificate.

    Shedding vertices are tried in ascending order and the first success wins. Sub-problems
    are memoized on their relabeled facet lists. A positive certificate carries the
    decomposition tree in the original labels; a negative one names the first complex
    along the search path without a usable shedding vertex.

    Raises:
        DomainError: If the complex is void
        CapacityError: If it has more than `decomposition_max_vertices` vertices

    Example:
        ```python
        certificate = is_vertex_decomposable(young_complex(Partition((3, 2)), 1))
        assert certificate.verdict
        ```
    """
    if complex_.is_void:
        raise DomainError("Vertex decomposability is undefined for the void complex")
    enforce_limit("vertex count", len(complex_.vertices), "decomposition_max_vertices")
    verdict = _decomposable(complex_)
    info = _decide.cache_info()
    logger.debug(
        "vertex decomposability",
        complex=str(complex_),
        verdict=verdict,
        memo_hits=info.hits,
        memo_size=info.currsize,
    )
    if verdict:
        return DecompCertificate(True, DecompKind.VD, tree=_tree(complex_))
    return DecompCertificate(False, DecompKind.VD, obstruction=_obstruction(complex_))
