"""Tests for the JSON encodings."""

import json

import pytest

from ytc.complexes import SimplicialComplex, from_facets
from ytc.core.base import CheckResult, VerifyReport
from ytc.decomp import is_shellable, is_vertex_decomposable
from ytc.formulas import ChiBounds, chi_lemma_checks
from ytc.homology import BettiVector, hochster_table
from ytc.homotopy import HomotopyClass, build_reduction_graph
from ytc.pathideal import PathIdealSpec, squarefree_power_generators
from ytc.serialization import (
    dumps,
    loads_betti,
    loads_certificate,
    loads_complex,
    loads_graph,
    loads_homotopy,
    loads_lemma_reports,
    loads_monomials,
    loads_table,
    loads_verify_report,
)


class TestComplexJson:
    """Test the shared complex schema."""

    def test_schema(self):
        """Test field names and sorted arrays."""
        complex_ = from_facets([[2, 3], [1, 2]], universe=[3, 1, 2])
        assert json.loads(dumps(complex_)) == {
            "status": "proper",
            "facets": [[1, 2], [2, 3]],
            "universe": [1, 2, 3],
        }

    def test_empty_complexes(self):
        """Test that void and irrelevant keep their status."""
        void = loads_complex(dumps(SimplicialComplex.void([1, 2])))
        assert void.is_void
        assert void.universe == frozenset({1, 2})
        irrelevant = json.loads(dumps(SimplicialComplex.irrelevant()))
        assert irrelevant == {"status": "irrelevant", "facets": [[]]}
        assert loads_complex(dumps(SimplicialComplex.irrelevant())).is_irrelevant

    def test_universe_omitted_when_unset(self, path_complex):
        """Test that a complex without a universe carries no universe key."""
        payload = json.loads(dumps(path_complex))
        assert "universe" not in payload
        assert loads_complex(dumps(path_complex)).universe is None

    def test_example_complex(self, example_complex):
        """Test that a parsed complex equals the original."""
        assert loads_complex(dumps(example_complex)) == example_complex


class TestHomologyJson:
    """Test homotopy, Betti and table payloads."""

    def test_homotopy(self):
        """Test the wedge and contractible encodings."""
        wedge = HomotopyClass.from_mapping({1: 3, 2: 1})
        assert json.loads(dumps(wedge)) == {"type": "wedge", "spheres": {"1": 3, "2": 1}}
        assert loads_homotopy(dumps(wedge)) == wedge
        assert json.loads(dumps(HomotopyClass.point())) == {"type": "contractible"}
        assert loads_homotopy(dumps(HomotopyClass.point())).is_contractible

    def test_betti_lists_every_degree(self):
        """Test that degrees from -1 up to the top are listed."""
        betti = BettiVector.from_mapping({1: 3, 2: 1})
        assert json.loads(dumps(betti)) == {"-1": 0, "0": 0, "1": 3, "2": 1}
        assert loads_betti(dumps(betti)) == betti

    def test_table(self, path_complex):
        """Test the multigraded table encoding."""
        table = hochster_table(path_complex, [1, 2, 3])
        payload = json.loads(dumps(table))
        assert payload["universe"] == [1, 2, 3]
        assert {"i": 1, "sigma": [1, 3], "beta": 1} in payload["entries"]
        assert loads_table(dumps(table)) == table


class TestMonomialJson:
    """Test the generator payload."""

    def test_monomials(self):
        """Test the generator supports of n = 5, t = 2, k = 2."""
        generators = squarefree_power_generators(PathIdealSpec(n=5, t=2, k=2))
        assert json.loads(dumps(generators)) == {
            "n": 5,
            "t": 2,
            "k": 2,
            "supports": [[1, 2, 3, 4], [1, 2, 4, 5], [2, 3, 4, 5]],
        }
        assert loads_monomials(dumps(generators)) == generators


class TestCertificateJson:
    """Test decomposability certificates."""

    def test_tree(self, triangle_boundary):
        """Test that base nodes are empty objects and deletions use the short key."""
        certificate = is_vertex_decomposable(triangle_boundary)
        payload = json.loads(dumps(certificate))
        assert payload["verdict"] is True
        assert payload["kind"] == "vd"
        assert payload["tree"]["vertex"] == 1
        assert payload["tree"]["del"] == {}
        assert "order" not in payload
        assert loads_certificate(dumps(certificate)) == certificate

    def test_shelling(self, triangle_boundary, two_edges):
        """Test orders and obstructions."""
        positive = is_shellable(triangle_boundary)
        assert json.loads(dumps(positive))["order"] == [[1, 2], [1, 3], [2, 3]]
        negative = is_shellable(two_edges)
        payload = json.loads(dumps(negative))
        assert payload["obstruction"] == {"level": 1, "facets": [[1, 2]]}
        assert loads_certificate(dumps(negative)) == negative


class TestGraphJson:
    """Test the reduction graph payload."""

    def test_graph(self):
        """Test edges, leaves and path counts."""
        graph = build_reduction_graph(9, 3, 2)
        payload = json.loads(dumps(graph))
        assert payload["n"] == 9
        assert len(payload["edges"]) == 9
        assert {"source": [9, 3], "target": [7, 2], "kind": "A", "label": 0} in payload["edges"]
        assert {"leaf": [6, 3], "label_sum": 2, "count": 1} in payload["path_counts"]

        parsed = loads_graph(dumps(graph))
        assert parsed.edges == graph.edges
        assert parsed.leaves == graph.leaves
        assert parsed.path_label_counts() == graph.path_label_counts()


class TestReportJson:
    """Test lemma and verification reports."""

    def test_lemma_reports(self):
        """Test the pass flag alias and the range object."""
        reports = chi_lemma_checks(ChiBounds(max_n=12, max_k=2, max_t=2))
        payload = json.loads(dumps(reports))
        assert payload[0]["lemma"] == "shift"
        assert payload[0]["pass"] is True
        assert payload[0]["range"] == {"max_n": 12, "max_k": 2, "max_t": 2}
        assert loads_lemma_reports(dumps(reports)) == reports

    def test_verify_report(self):
        """Test that the overall flag is derived from the checks."""
        report = VerifyReport(
            checks=[
                CheckResult(name="a", passed=True, cases=3),
                CheckResult(name="b", passed=False, cases=2, failures=1),
            ]
        )
        payload = json.loads(dumps(report))
        assert payload["passed"] is False
        assert loads_verify_report(dumps(report)) == report

    def test_unsupported(self):
        """Test that unknown values and other lists are rejected."""
        with pytest.raises(TypeError):
            dumps(object())
        with pytest.raises(TypeError):
            dumps([1, 2])
