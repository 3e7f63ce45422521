"""The labeled reduction digraph that unwinds the dual-complex recursion.

Vertices are pairs ``(m, j)``. While ``j ≥ 1`` and ``m - jt > t`` a vertex emits

* an A-edge to ``(m - t, j - 1)`` with label 0,
* a B-edge to ``(m - t - 1, j - 1)`` with label 1,
* a C-edge to ``(m - t - 1, j)`` with label 2.

Everything else reached from the root ``(n, k)`` is a leaf: either ``jt ≤ m ≤ jt + t``
with ``j ≥ 1``, or a terminal with ``j = 0``. The label sum along a path is the number
of suspensions applied to that leaf's complex.
"""

from collections import Counter, deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

import networkx as nx
import structlog

from ..exceptions import DomainError, PreconditionError

logger = structlog.get_logger()

Node = Tuple[int, int]


class EdgeKind(str, Enum):
    A = "A"
    B = "B"
    C = "C"


EDGE_LABELS = {EdgeKind.A: 0, EdgeKind.B: 1, EdgeKind.C: 2}


@dataclass(frozen=True)
class PathCount:
    """Number of root-to-leaf paths whose labels add up to ``label_sum``."""

    leaf: Node
    label_sum: int
    count: int


@dataclass(frozen=True)
class GraphEdge:
    source: Node
    target: Node
    kind: EdgeKind

    @property
    def label(self) -> int:
        return EDGE_LABELS[self.kind]


def _node_key(node: Node) -> Tuple[int, int]:
    return (-node[0], -node[1])


class ReductionGraph:
    """Reachable closure of the reduction rules from ``(n, k)``, backed by a networkx DiGraph."""

    def __init__(self, n: int, k: int, t: int, graph: "nx.DiGraph") -> None:
        self.n = n
        self.k = k
        self.t = t
        self.graph = graph

    @property
    def root(self) -> Node:
        return (self.n, self.k)

    @property
    def vertices(self) -> List[Node]:
        return sorted(self.graph.nodes, key=_node_key)

    @property
    def edges(self) -> List[GraphEdge]:
        edges = [
            GraphEdge(source, target, data["kind"])
            for source, target, data in self.graph.edges(data=True)
        ]
        return sorted(edges, key=lambda e: (_node_key(e.source), e.label))

    def is_leaf(self, node: Node) -> bool:
        return bool(self.graph.nodes[node]["leaf"])

    @property
    def leaves(self) -> List[Node]:
        return [node for node in self.vertices if self.is_leaf(node)]

    def path_label_counts(self) -> List[PathCount]:
        """Count root-to-leaf paths per label sum by dynamic programming in topological order."""
        counts: Dict[Node, "Counter[int]"] = {node: Counter() for node in self.graph.nodes}
        counts[self.root][0] = 1
        for node in nx.topological_sort(self.graph):
            for target, data in self.graph[node].items():
                label = EDGE_LABELS[data["kind"]]
                for alpha, count in counts[node].items():
                    counts[target][alpha + label] += count
        return [
            PathCount(leaf, alpha, counts[leaf][alpha])
            for leaf in self.leaves
            for alpha in sorted(counts[leaf])
        ]

    def to_dot(self) -> str:
        """GraphViz source with ``"m,j"`` node names and the edge label as ``label``."""
        lines = ["digraph G {"]
        if not self.edges:
            lines.append(f'  "{self.n},{self.k}";')
        for edge in self.edges:
            (m, j), (m2, j2) = edge.source, edge.target
            lines.append(f'  "{m},{j}" -> "{m2},{j2}" [label={edge.label}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _children(node: Node, t: int) -> List[Tuple[Node, EdgeKind]]:
    m, j = node
    if j < 1 or m - j * t <= t:
        return []
    return [
        ((m - t, j - 1), EdgeKind.A),
        ((m - t - 1, j - 1), EdgeKind.B),
        ((m - t - 1, j), EdgeKind.C),
    ]


def build_reduction_graph(n: int, k: int, t: int) -> ReductionGraph:
    """Build the reduction digraph rooted at ``(n, k)``.

    Raises:
        PreconditionError: Unless ``n - kt > t``
    """
    if t < 1 or k < 0:
        raise DomainError(f"Need t >= 1 and k >= 0, got t={t}, k={k}")
    if n - k * t <= t:
        raise PreconditionError(f"The reduction graph needs n - kt > t, got n={n}, k={k}, t={t}")

    graph = nx.DiGraph()
    root = (n, k)
    queue = deque([root])
    graph.add_node(root)
    while queue:
        node = queue.popleft()
        children = _children(node, t)
        graph.nodes[node]["leaf"] = not children
        for child, kind in children:
            if child not in graph:
                graph.add_node(child)
                queue.append(child)
            graph.add_edge(node, child, kind=kind)
    logger.debug(
        "reduction graph",
        n=n,
        k=k,
        t=t,
        vertices=graph.number_of_nodes(),
        edges=graph.number_of_edges(),
    )
    return ReductionGraph(n, k, t, graph)
