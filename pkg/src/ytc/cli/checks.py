"""Cross-checks run by ``ytc verify``.

Each check compares two independent routes to the same quantity: a closed form
against a brute-force oracle, a symbolic homotopy type against exact homology, or a
published value against the formula that produces it.
"""

from typing import Dict, Iterator, Tuple, Type

from ..complexes import alexander_dual, helly_number
from ..core.base import BaseCheck, Tally, VerifyBounds
from ..core.config import get_config
from ..decomp import (
    is_shellable,
    is_vertex_decomposable,
    replay_shelling,
    replay_vertex_decomposition,
)
from ..formulas import (
    REFERENCE_TABLES,
    chi_lemma_checks,
    generator_count,
    helly_formula,
    krull_formula,
    leray_formula,
    linearity_characterization,
    pd_formula,
    vd_characterization,
)
from ..homology import (
    Field,
    field_discrepancies,
    is_cohen_macaulay,
    leray_oracle,
    pd_oracle,
    reduced_betti,
    regularity_oracle,
)
from ..homotopy import (
    HomotopyClass,
    binomial_wedge,
    build_reduction_graph,
    dual_homotopy,
    lower_bound_degree,
    top_homology_witness,
    young_homotopy,
)
from ..pathideal import (
    PathIdealSpec,
    dual_complex,
    krull_height_oracle,
    matching_numbers,
    max_matching_size,
    squarefree_power_generators,
    stanley_reisner_complex,
)
from ..young import (
    Partition,
    identified_partition,
    partitions_up_to,
    young_complex,
    young_filling,
)

EXAMPLE_FACETS = (
    (1, 2, 6, 7, 11),
    (1, 2, 6, 10, 11),
    (1, 2, 9, 10, 11),
    (1, 5, 6, 7, 11),
    (1, 5, 6, 10, 11),
    (1, 5, 9, 10, 11),
    (1, 8, 9, 10, 11),
    (4, 5, 6, 7, 11),
    (4, 5, 6, 10, 11),
    (4, 5, 9, 10, 11),
    (4, 8, 9, 10, 11),
    (7, 8, 9, 10, 11),
)

GRAPH_EDGES = {
    ((9, 3), (7, 2), 0),
    ((9, 3), (6, 2), 1),
    ((9, 3), (6, 3), 2),
    ((7, 2), (5, 1), 0),
    ((7, 2), (4, 1), 1),
    ((7, 2), (4, 2), 2),
    ((5, 1), (3, 0), 0),
    ((5, 1), (2, 0), 1),
    ((5, 1), (2, 1), 2),
}


def _specs(bounds: VerifyBounds, min_t: int = 1) -> Iterator[PathIdealSpec]:
    """Every nonzero ``I_{n,t}^{[k]}`` inside the bounds; t = 1 stops at ``max_n_t1``."""
    for t in range(min_t, bounds.max_t + 1):
        top = min(bounds.max_n, bounds.max_n_t1) if t == 1 else bounds.max_n
        for n in range(t, top + 1):
            for k in range(1, min(n // t, bounds.max_k) + 1):
                yield PathIdealSpec(n=n, t=t, k=k)


def _shapes(bounds: VerifyBounds, min_t: int = 1) -> Iterator[Tuple[Partition, int]]:
    for shape in partitions_up_to(bounds.max_cells):
        for t in range(min_t, bounds.max_t + 1):
            yield shape, t


def _matches(homotopy: HomotopyClass, betti: Dict[int, int]) -> bool:
    return homotopy.as_dict() == betti


class ReferenceTablesCheck(BaseCheck):
    name = "reference-tables"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        for table in REFERENCE_TABLES:
            wrong = {n for n, _, _ in table.mismatches()}
            for n in table.entries:
                tally.record(n not in wrong, invariant=table.invariant, n=n, k=table.k, t=table.t)


class ExampleComplexCheck(BaseCheck):
    name = "young-example"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        complex_ = young_complex(Partition((5, 4, 2)), 3)
        tally.record(complex_.facets == EXAMPLE_FACETS, shape="5,4,2", t=3)


class ExampleHomotopyCheck(BaseCheck):
    name = "example-homotopy"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        expected = {1: 3, 2: 1}
        tally.record(dual_homotopy(9, 3, 2).as_dict() == expected, n=9, k=3, t=2)
        betti = reduced_betti(young_complex(Partition((3, 3, 3, 3)), 2))
        tally.record(betti.as_dict() == expected, shape="3,3,3,3", t=2)


class ReductionGraphCheck(BaseCheck):
    name = "reduction-graph"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        graph = build_reduction_graph(9, 3, 2)
        edges = {(e.source, e.target, e.label) for e in graph.edges}
        tally.record(len(graph.vertices) - 1 == 9 and edges == GRAPH_EDGES, n=9, k=3, t=2)
        counts = {(p.leaf, p.label_sum): p.count for p in graph.path_label_counts()}
        for leaf, alpha in (((6, 3), 2), ((6, 2), 1), ((4, 2), 2), ((4, 1), 1), ((2, 1), 2)):
            tally.record(counts.get((leaf, alpha)) == 1, m=leaf[0], j=leaf[1], alpha=alpha)


class PdOracleCheck(BaseCheck):
    name = "pd-oracle"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        for spec in _specs(bounds):
            oracle = pd_oracle(stanley_reisner_complex(spec), spec.vertices)
            tally.record(oracle == pd_formula(spec.n, spec.k, spec.t), n=spec.n, k=spec.k, t=spec.t)


class TeraiCheck(BaseCheck):
    name = "terai"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        for spec in _specs(bounds):
            pd = pd_oracle(stanley_reisner_complex(spec), spec.vertices)
            reg = regularity_oracle(dual_complex(spec), spec.vertices)
            tally.record(pd == reg + 1, n=spec.n, k=spec.k, t=spec.t)


class LerayCheck(BaseCheck):
    name = "leray"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        for spec in _specs(bounds):
            dual = dual_complex(spec)
            leray = leray_oracle(dual, spec.vertices)
            ok = leray == leray_formula(spec.n, spec.k, spec.t) == regularity_oracle(
                dual, spec.vertices
            )
            tally.record(ok, n=spec.n, k=spec.k, t=spec.t)


class KrullCheck(BaseCheck):
    name = "krull"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        for spec in _specs(bounds):
            dimension = krull_height_oracle(spec).dimension
            tally.record(
                dimension == krull_formula(spec.n, spec.k, spec.t), n=spec.n, k=spec.k, t=spec.t
            )


class DualAgreementCheck(BaseCheck):
    name = "dual-agreement"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        for spec in _specs(bounds):
            tally.record(
                dual_complex(spec) == dual_complex(spec, oracle=True), n=spec.n, k=spec.k, t=spec.t
            )


class GeneratorCheck(BaseCheck):
    name = "generators"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        for spec in _specs(bounds):
            count = len(squarefree_power_generators(spec))
            tally.record(
                count == generator_count(spec.n, spec.k, spec.t), n=spec.n, k=spec.k, t=spec.t
            )
        for t in range(1, bounds.max_t + 1):
            for n in range(t, bounds.max_n + 1):
                nu, _ = matching_numbers(n, t)
                tally.record(nu == max_matching_size(n, t), n=n, t=t)


class HomotopyHomologyCheck(BaseCheck):
    name = "homotopy-homology"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        for shape, t in _shapes(bounds):
            complex_ = young_complex(shape, t)
            betti = reduced_betti(complex_, Field.RATIONALS)
            tally.record(_matches(young_homotopy(shape, t), betti.as_dict()), shape=str(shape), t=t)
            if len(complex_.vertices) <= 12:
                field_discrepancies(complex_)


class BinomialWedgeCheck(BaseCheck):
    name = "binomial-wedge"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        for t in range(1, bounds.max_t + 1):
            for l in range(1, t + 1):  # noqa: E741
                for k in range(0, (bounds.max_n - l) // t + 1):
                    n = k * t + l
                    wedge = binomial_wedge(n, k, t)
                    shape = identified_partition(n, k, t)
                    betti = reduced_betti(young_complex(shape, t)).as_dict()
                    ok = wedge == young_homotopy(shape, t) and _matches(wedge, betti)
                    tally.record(ok, n=n, k=k, t=t)


class DualHomotopyCheck(BaseCheck):
    name = "dual-homotopy"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        for spec in _specs(bounds):
            n, k, t = spec.n, spec.k, spec.t
            homotopy = dual_homotopy(n, k, t)
            betti = reduced_betti(dual_complex(spec)).as_dict()
            tally.record(_matches(homotopy, betti), n=n, k=k, t=t, part="homology")
            degree = lower_bound_degree(n, k, t)
            if degree is not None:
                tally.record(homotopy.multiplicity(degree) > 0, n=n, k=k, t=t, part="lower")
            top = top_homology_witness(n, k, t)
            if top is not None:
                tally.record(homotopy.multiplicity(top) > 0, n=n, k=k, t=t, part="top")


class DecomposabilityCheck(BaseCheck):
    name = "decomposability"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        for shape, t in _shapes(bounds):
            complex_ = young_complex(shape, t)
            expected = vd_characterization(shape, t)
            vd = is_vertex_decomposable(complex_)
            case = {"shape": str(shape), "t": t}
            tally.record(vd.verdict == expected, check="vd", **case)
            if vd.verdict:
                tally.record(replay_vertex_decomposition(complex_, vd), check="vd-replay", **case)
            if len(complex_.facets) <= get_config().limits.shelling_max_facets:
                shelling = is_shellable(complex_)
                tally.record(shelling.verdict == expected, check="shelling", **case)
                if shelling.verdict:
                    tally.record(replay_shelling(complex_, shelling), check="replay", **case)
            for field in (Field.RATIONALS, Field.GF2):
                cm = is_cohen_macaulay(complex_, field)
                tally.record(cm == expected, check=f"cm-{field.value}", **case)


class HellyCheck(BaseCheck):
    name = "helly"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        for shape, t in _shapes(bounds):
            universe = young_filling(shape, t).universe
            dual = alexander_dual(young_complex(shape, t), universe)
            tally.record(
                helly_number(dual, universe) == helly_formula(shape, t), shape=str(shape), t=t
            )


class LinearityCheck(BaseCheck):
    name = "linearity"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        for spec in _specs(bounds, min_t=2):
            linear = linearity_characterization(spec.n, spec.k, spec.t).linear_resolution
            cm = is_cohen_macaulay(dual_complex(spec))
            tally.record(cm == linear, n=spec.n, k=spec.k, t=spec.t)


class ChiLemmaCheck(BaseCheck):
    name = "chi-lemmas"

    def _run(self, bounds: VerifyBounds, tally: Tally) -> None:
        for report in chi_lemma_checks():
            tally.record(report.passed, lemma=report.lemma, **(report.counterexample or {}))


CHECKS: Dict[str, Type[BaseCheck]] = {
    check.name: check
    for check in (
        ReferenceTablesCheck,
        ExampleComplexCheck,
        ExampleHomotopyCheck,
        ReductionGraphCheck,
        PdOracleCheck,
        TeraiCheck,
        LerayCheck,
        KrullCheck,
        DualAgreementCheck,
        GeneratorCheck,
        HomotopyHomologyCheck,
        BinomialWedgeCheck,
        DualHomotopyCheck,
        DecomposabilityCheck,
        HellyCheck,
        LinearityCheck,
        ChiLemmaCheck,
    )
}
