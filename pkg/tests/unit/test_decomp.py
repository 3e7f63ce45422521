"""Tests for the vertex-decomposability and shelling searches and their certificates."""

import pytest

from ytc.complexes import SimplicialComplex, from_facets
from ytc.decomp import (
    DecompCertificate,
    DecompKind,
    Obstruction,
    VDNode,
    is_shellable,
    is_vertex_decomposable,
    replay_shelling,
    replay_vertex_decomposition,
    shedding_vertices,
)
from ytc.decomp.vertex import _decide
from ytc.exceptions import CapacityError, DomainError, PreconditionError
from ytc.formulas import vd_characterization
from ytc.young import Partition, young_complex


class TestSheddingVertices:
    """Test shedding vertex detection."""

    def test_triangle_boundary(self, triangle_boundary):
        """Test that every vertex of a cycle sheds."""
        assert shedding_vertices(triangle_boundary) == [1, 2, 3]

    def test_two_edges(self, two_edges):
        """Test that no vertex of two disjoint edges sheds."""
        assert shedding_vertices(two_edges) == []

    def test_path(self, path_complex):
        """Test that only the middle vertex of a path fails to shed."""
        assert shedding_vertices(path_complex) == [1, 3]

    def test_empty_face(self):
        """Test that the empty face has no vertices to shed."""
        with pytest.raises(DomainError):
            shedding_vertices(SimplicialComplex.irrelevant())


class TestVertexDecomposable:
    """Test the vertex-decomposability search."""

    def test_base_cases(self):
        """Test that a simplex and the empty face are decomposable."""
        assert is_vertex_decomposable(from_facets([[1, 2, 3]])).tree == VDNode()
        assert is_vertex_decomposable(SimplicialComplex.irrelevant()).verdict

    def test_positive_certificate(self, triangle_boundary):
        """Test that the tree sheds the smallest vertex first and replays."""
        certificate = is_vertex_decomposable(triangle_boundary)
        assert certificate.verdict
        assert certificate.kind is DecompKind.VD
        assert certificate.tree is not None
        assert certificate.tree.vertex == 1
        assert certificate.tree.size() == 5
        assert replay_vertex_decomposition(triangle_boundary, certificate)

    def test_negative_certificate(self, two_edges):
        """Test that the obstruction is the complex itself when nothing sheds."""
        certificate = is_vertex_decomposable(two_edges)
        assert not certificate.verdict
        assert certificate.tree is None
        assert certificate.obstruction == Obstruction(0, ((1, 2), (3, 4)))
        assert not replay_vertex_decomposition(two_edges, certificate)

    @pytest.mark.parametrize(
        "parts, t",
        [((5, 4, 2), 3), ((3, 3), 2), ((3, 2), 2), ((2, 2, 2), 1), ((4, 2, 1), 2)],
    )
    def test_young_characterization(self, parts, t):
        """Test the search against the closed characterization."""
        shape = Partition(parts)
        complex_ = young_complex(shape, t)
        certificate = is_vertex_decomposable(complex_)
        assert certificate.verdict == vd_characterization(shape, t)
        if certificate.verdict:
            assert replay_vertex_decomposition(complex_, certificate)

    def test_void(self):
        """Test that the void complex is rejected."""
        with pytest.raises(DomainError):
            is_vertex_decomposable(SimplicialComplex.void())

    def test_capacity(self, limits, triangle_boundary):
        """Test the vertex cap."""
        limits(decomposition_max_vertices=2)
        with pytest.raises(CapacityError):
            is_vertex_decomposable(triangle_boundary)

    def test_memo_is_bounded(self, example_complex):
        """Test that the sub-problem memo has a size limit and stays within it."""
        is_vertex_decomposable(example_complex)
        info = _decide.cache_info()
        assert info.maxsize is not None
        assert 0 < info.currsize <= info.maxsize

    def test_replay_rejects_bad_tree(self, two_edges):
        """Test that replay checks the shedding condition itself."""
        forged = DecompCertificate(True, DecompKind.VD, tree=VDNode(1, VDNode(), VDNode()))
        assert not replay_vertex_decomposition(two_edges, forged)


class TestShellable:
    """Test the shelling-order search."""

    def test_positive_certificate(self, triangle_boundary):
        """Test that a cycle is shelled in canonical order."""
        certificate = is_shellable(triangle_boundary)
        assert certificate.verdict
        assert certificate.kind is DecompKind.SHELLING
        assert certificate.order == ((1, 2), (1, 3), (2, 3))
        assert replay_shelling(triangle_boundary, certificate)

    def test_negative_certificate(self, two_edges):
        """Test the longest prefix reported for two disjoint edges."""
        certificate = is_shellable(two_edges)
        assert not certificate.verdict
        assert certificate.obstruction == Obstruction(1, ((1, 2),))

    def test_not_shellable_annulus(self):
        """Test that a strip of triangles around a hole is not shellable."""
        complex_ = young_complex(Partition((3, 3)), 2)
        assert not is_shellable(complex_).verdict

    def test_replay_rejects_bad_order(self, two_edges):
        """Test that replay rejects an order that is not a shelling."""
        forged = DecompCertificate(True, DecompKind.SHELLING, order=((1, 2), (3, 4)))
        assert not replay_shelling(two_edges, forged)

    def test_not_pure(self):
        """Test that non-pure complexes are rejected."""
        with pytest.raises(PreconditionError):
            is_shellable(from_facets([[1, 2, 3], [3, 4]]))

    def test_capacity(self, limits, example_complex):
        """Test the facet cap."""
        limits(shelling_max_facets=11)
        with pytest.raises(CapacityError):
            is_shellable(example_complex)
