"""Certificates returned by the decomposability checkers, and their independent replay.

Replay works on plain frozensets straight from the definitions and shares no code with
the searches that produced the certificate.
"""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

from ..complexes import Face, SimplicialComplex


class DecompKind(str, Enum):
    VD = "vd"
    SHELLING = "shelling"


@dataclass(frozen=True)
class VDNode:
    """One step of a vertex decomposition.

    ``vertex`` is None at a base case (``{∅}`` or a simplex); otherwise it is the shedding
    vertex and both subtrees decompose its link and its deletion.
    """

    vertex: Optional[int] = None
    link: Optional["VDNode"] = None
    deletion: Optional["VDNode"] = None

    @property
    def is_base(self) -> bool:
        return self.vertex is None

    def size(self) -> int:
        if self.is_base:
            return 1
        assert self.link is not None and self.deletion is not None
        return 1 + self.link.size() + self.deletion.size()


@dataclass(frozen=True)
class Obstruction:
    """Where a negative search got stuck.

    For vertex decomposability: the first complex along the search path with no usable
    shedding vertex and its depth. For shellability: the longest shellable prefix found.
    """

    level: int
    facets: Tuple[Face, ...]


@dataclass(frozen=True)
class DecompCertificate:
    verdict: bool
    kind: DecompKind
    tree: Optional[VDNode] = None
    order: Optional[Tuple[Face, ...]] = None
    obstruction: Optional[Obstruction] = None


Facets = FrozenSet[FrozenSet[int]]


def _maximal(faces: Iterable[FrozenSet[int]]) -> Facets:
    pool: Set[FrozenSet[int]] = set(faces)
    return frozenset(f for f in pool if not any(f < g for g in pool))


def _raw_facets(complex_: SimplicialComplex) -> Facets:
    return frozenset(frozenset(f) for f in complex_.facets)


def _replay_vd(facets: Facets, node: VDNode) -> bool:
    if node.is_base:
        return len(facets) == 1
    x = node.vertex
    if node.link is None or node.deletion is None:
        return False
    if not any(x in f for f in facets) or len(facets) == 1:
        return False
    deleted = _maximal(f - {x} for f in facets)
    if not deleted <= facets:
        return False
    linked = _maximal(f - {x} for f in facets if x in f)
    return _replay_vd(linked, node.link) and _replay_vd(deleted, node.deletion)


def replay_vertex_decomposition(
    complex_: SimplicialComplex, certificate: DecompCertificate
) -> bool:
    """Re-check a positive vertex-decomposability certificate against the definition."""
    if not certificate.verdict or certificate.tree is None:
        return False
    return _replay_vd(_raw_facets(complex_), certificate.tree)


def replay_shelling(complex_: SimplicialComplex, certificate: DecompCertificate) -> bool:
    """Re-check a shelling order: each facet meets its predecessors in codimension one."""
    order = certificate.order
    if not certificate.verdict or order is None:
        return False
    steps = [frozenset(f) for f in order]
    if len(set(steps)) != len(steps) or set(steps) != set(_raw_facets(complex_)):
        return False
    for index in range(1, len(steps)):
        current = steps[index]
        earlier = steps[:index]
        ridges: List[FrozenSet[int]] = [
            current - {v} for v in current if any(current - {v} <= g for g in earlier)
        ]
        if not ridges:
            return False
        for g in earlier:
            if not any(g & current <= r for r in ridges):
                return False
    return True
