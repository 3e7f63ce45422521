"""JSON encodings of the values ytc prints.

Each value type has a Pydantic payload model that fixes its wire shape. `dumps`
converts any supported value to JSON text, and a `loads_*` function per type parses
that text back into an equal value.

Example:
    ```python
    from ytc.homotopy import HomotopyClass
    from ytc.serialization import dumps, loads_homotopy

    text = dumps(HomotopyClass.from_mapping({1: 3, 2: 1}))
    assert loads_homotopy(text) == HomotopyClass.from_mapping({1: 3, 2: 1})
    ```
"""

from functools import singledispatch
from typing import Any, Dict, List, Literal, Optional, Tuple

import networkx as nx
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    RootModel,
    SerializerFunctionWrapHandler,
    model_serializer,
)

from .complexes import SimplicialComplex, Status, from_facets, make_face
from .core.base import VerifyReport
from .decomp import DecompCertificate, DecompKind, Obstruction, VDNode
from .formulas import ChiBounds, LemmaReport
from .homology import BettiVector, GradedBettiTable
from .homotopy import EdgeKind, HomotopyClass, ReductionGraph
from .pathideal import MonomialSet

Pair = Tuple[int, int]


class _Compact(BaseModel):
    """Payload whose unset optional fields are left out of the JSON."""

    @model_serializer(mode="wrap")
    def _drop_none(self, handler: SerializerFunctionWrapHandler) -> Dict[str, Any]:
        return {key: value for key, value in handler(self).items() if value is not None}


class ComplexPayload(_Compact):
    status: Status
    facets: List[List[int]]
    universe: Optional[List[int]] = None


class HomotopyPayload(_Compact):
    type: Literal["wedge", "contractible"]
    spheres: Optional[Dict[int, int]] = None


class BettiPayload(RootModel[Dict[int, int]]):
    pass


class BettiEntry(BaseModel):
    i: int
    sigma: List[int]
    beta: int


class TablePayload(BaseModel):
    universe: List[int]
    entries: List[BettiEntry]


class MonomialPayload(BaseModel):
    n: int
    t: int
    k: int
    supports: List[List[int]]


class TreePayload(_Compact):
    vertex: Optional[int] = None
    link: Optional["TreePayload"] = None
    deletion: Optional["TreePayload"] = Field(default=None, alias="del")

    model_config = ConfigDict(populate_by_name=True)


TreePayload.model_rebuild()


class ObstructionPayload(BaseModel):
    level: int
    facets: List[List[int]]


class CertificatePayload(_Compact):
    verdict: bool
    kind: DecompKind
    tree: Optional[TreePayload] = None
    order: Optional[List[List[int]]] = None
    obstruction: Optional[ObstructionPayload] = None


class EdgePayload(BaseModel):
    source: Pair
    target: Pair
    kind: EdgeKind
    label: int


class PathCountPayload(BaseModel):
    leaf: Pair
    label_sum: int
    count: int


class GraphPayload(BaseModel):
    n: int
    k: int
    t: int
    vertices: List[Pair]
    leaves: List[Pair]
    edges: List[EdgePayload]
    path_counts: List[PathCountPayload]


class LemmaPayload(BaseModel):
    lemma: str
    range: ChiBounds
    passed: bool = Field(alias="pass")
    cases: int
    counterexample: Optional[Dict[str, int]] = None

    model_config = ConfigDict(populate_by_name=True)


class LemmaReportsPayload(RootModel[List[LemmaPayload]]):
    pass


@singledispatch
def to_payload(value: Any) -> BaseModel:
    """Convert a value to its payload model."""
    if isinstance(value, BaseModel):
        return value
    raise TypeError(f"No JSON encoding for {type(value).__name__}")


@to_payload.register
def _complex_payload(value: SimplicialComplex) -> BaseModel:
    universe = sorted(value.universe) if value.universe is not None else None
    return ComplexPayload(
        status=value.status, facets=[list(f) for f in value.facets], universe=universe
    )


@to_payload.register
def _homotopy_payload(value: HomotopyClass) -> BaseModel:
    if value.is_contractible:
        return HomotopyPayload(type="contractible")
    return HomotopyPayload(type="wedge", spheres=value.as_dict())


@to_payload.register
def _betti_payload(value: BettiVector) -> BaseModel:
    top = max(value.degrees, default=-1)
    return BettiPayload({d: value[d] for d in range(-1, top + 1)})


@to_payload.register
def _table_payload(value: GradedBettiTable) -> BaseModel:
    return TablePayload(
        universe=list(value.universe),
        entries=[BettiEntry(i=i, sigma=list(s), beta=b) for i, s, b in value.entries],
    )


@to_payload.register
def _monomial_payload(value: MonomialSet) -> BaseModel:
    return MonomialPayload(
        n=value.n, t=value.t, k=value.k, supports=[list(s) for s in value.supports]
    )


def _tree_payload(node: VDNode) -> TreePayload:
    if node.is_base:
        return TreePayload()
    assert node.link is not None and node.deletion is not None
    return TreePayload(
        vertex=node.vertex, link=_tree_payload(node.link), deletion=_tree_payload(node.deletion)
    )


@to_payload.register
def _certificate_payload(value: DecompCertificate) -> BaseModel:
    obstruction = None
    if value.obstruction is not None:
        obstruction = ObstructionPayload(
            level=value.obstruction.level, facets=[list(f) for f in value.obstruction.facets]
        )
    return CertificatePayload(
        verdict=value.verdict,
        kind=value.kind,
        tree=_tree_payload(value.tree) if value.tree is not None else None,
        order=[list(f) for f in value.order] if value.order is not None else None,
        obstruction=obstruction,
    )


@to_payload.register
def _graph_payload(value: ReductionGraph) -> BaseModel:
    return GraphPayload(
        n=value.n,
        k=value.k,
        t=value.t,
        vertices=value.vertices,
        leaves=value.leaves,
        edges=[
            EdgePayload(source=e.source, target=e.target, kind=e.kind, label=e.label)
            for e in value.edges
        ],
        path_counts=[
            PathCountPayload(leaf=p.leaf, label_sum=p.label_sum, count=p.count)
            for p in value.path_label_counts()
        ],
    )


def _lemma_payload(report: LemmaReport) -> LemmaPayload:
    return LemmaPayload(
        lemma=report.lemma,
        range=report.bounds,
        passed=report.passed,
        cases=report.cases,
        counterexample=report.counterexample,
    )


@to_payload.register
def _single_lemma_payload(value: LemmaReport) -> BaseModel:
    return _lemma_payload(value)


@to_payload.register(list)
def _lemma_list_payload(value: List[Any]) -> BaseModel:
    if not all(isinstance(item, LemmaReport) for item in value):
        raise TypeError("Only lists of lemma reports have a JSON encoding")
    return LemmaReportsPayload([_lemma_payload(item) for item in value])


def dumps(value: Any, indent: Optional[int] = 2) -> str:
    """Serialize a supported value to JSON text."""
    return to_payload(value).model_dump_json(by_alias=True, indent=indent)


def loads_complex(text: str) -> SimplicialComplex:
    payload = ComplexPayload.model_validate_json(text)
    if payload.status is Status.VOID:
        return SimplicialComplex.void(payload.universe)
    if payload.status is Status.IRRELEVANT:
        return SimplicialComplex.irrelevant(payload.universe)
    return from_facets(payload.facets, universe=payload.universe)


def loads_homotopy(text: str) -> HomotopyClass:
    payload = HomotopyPayload.model_validate_json(text)
    return HomotopyClass.from_mapping(payload.spheres or {})


def loads_betti(text: str) -> BettiVector:
    return BettiVector.from_mapping(BettiPayload.model_validate_json(text).root)


def loads_table(text: str) -> GradedBettiTable:
    payload = TablePayload.model_validate_json(text)
    return GradedBettiTable(
        make_face(payload.universe),
        tuple((e.i, make_face(e.sigma), e.beta) for e in payload.entries),
    )


def loads_monomials(text: str) -> MonomialSet:
    payload = MonomialPayload.model_validate_json(text)
    return MonomialSet(
        payload.n, payload.t, payload.k, tuple(make_face(s) for s in payload.supports)
    )


def _tree_node(payload: TreePayload) -> VDNode:
    if payload.vertex is None or payload.link is None or payload.deletion is None:
        return VDNode()
    return VDNode(payload.vertex, _tree_node(payload.link), _tree_node(payload.deletion))


def loads_certificate(text: str) -> DecompCertificate:
    payload = CertificatePayload.model_validate_json(text)
    obstruction = None
    if payload.obstruction is not None:
        obstruction = Obstruction(
            payload.obstruction.level, tuple(tuple(f) for f in payload.obstruction.facets)
        )
    return DecompCertificate(
        verdict=payload.verdict,
        kind=payload.kind,
        tree=_tree_node(payload.tree) if payload.tree is not None else None,
        order=tuple(tuple(f) for f in payload.order) if payload.order is not None else None,
        obstruction=obstruction,
    )


def loads_graph(text: str) -> ReductionGraph:
    payload = GraphPayload.model_validate_json(text)
    graph = nx.DiGraph()
    leaves = set(payload.leaves)
    for vertex in payload.vertices:
        graph.add_node(vertex, leaf=vertex in leaves)
    for edge in payload.edges:
        graph.add_edge(edge.source, edge.target, kind=edge.kind)
    return ReductionGraph(payload.n, payload.k, payload.t, graph)


def loads_lemma_reports(text: str) -> List[LemmaReport]:
    payload = LemmaReportsPayload.model_validate_json(text)
    return [
        LemmaReport(item.lemma, item.range, item.cases, item.counterexample)
        for item in payload.root
    ]


def loads_verify_report(text: str) -> VerifyReport:
    return VerifyReport.model_validate_json(text)
