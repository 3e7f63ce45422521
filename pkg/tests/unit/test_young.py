"""Tests for partitions, t-fillings and t-Young complexes."""

import pytest

from ytc.complexes import from_facets
from ytc.exceptions import DomainError, PartitionParseError, PreconditionError
from ytc.young import (
    Partition,
    column_poset,
    identified_partition,
    order_complex_presentation,
    parse_partition,
    partitions_of,
    partitions_up_to,
    young_complex,
    young_filling,
)

EXAMPLE_FACETS = [
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
]


class TestPartition:
    """Test the Partition value type."""

    def test_zero_parts_trimmed(self):
        """Test that trailing zeros are dropped."""
        assert Partition((3, 1, 0)).parts == (3, 1)
        assert Partition((0,)).is_empty
        assert Partition(()) == Partition((0, 0))

    def test_not_decreasing(self):
        """Test that increasing parts are rejected."""
        with pytest.raises(DomainError):
            Partition((2, 3))

    def test_accessors(self, example_shape):
        """Test rows, cells and the first two parts."""
        assert example_shape.rows == 3
        assert example_shape.cells == 11
        assert example_shape.first == 5
        assert example_shape.second == 4
        assert Partition((4,)).second == 0
        assert str(example_shape) == "5,4,2"

    def test_capped(self, example_shape):
        """Test capping every part."""
        assert example_shape.capped(3).parts == (3, 3, 2)
        assert example_shape.capped(0).is_empty
        assert example_shape.capped(-2).is_empty


class TestParsePartition:
    """Test the command-line partition syntax."""

    def test_valid(self):
        """Test a well-formed partition."""
        assert parse_partition("5,4,2") == Partition((5, 4, 2))
        assert parse_partition(" 3 , 3 ").parts == (3, 3)

    @pytest.mark.parametrize(
        "text, index",
        [("2,3", 2), ("a", 1), ("3,,1", 2), ("3,-1", 2), ("4,4,5", 3)],
    )
    def test_invalid(self, text, index):
        """Test that the error names the offending part."""
        with pytest.raises(PartitionParseError) as excinfo:
            parse_partition(text)
        assert excinfo.value.index == index
        assert f"part {index}" in str(excinfo.value)


class TestEnumeration:
    """Test partition enumeration."""

    def test_partitions_of(self):
        """Test the partitions of four in decreasing lexicographic order."""
        assert [p.parts for p in partitions_of(4)] == [
            (4,),
            (3, 1),
            (2, 2),
            (2, 1, 1),
            (1, 1, 1, 1),
        ]
        assert [p.parts for p in partitions_of(4, max_part=2)] == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_partitions_up_to(self):
        """Test counts by number of cells."""
        assert len(list(partitions_up_to(5))) == 1 + 2 + 3 + 5 + 7


class TestFilling:
    """Test the t-filling of a diagram."""

    def test_rows(self, example_shape):
        """Test that row j starts at (r - j)t + 1."""
        filling = young_filling(example_shape, 3)
        assert filling.rows == ((7, 8, 9, 10, 11), (4, 5, 6, 7), (1, 2))
        assert filling.columns == ((1, 4, 7), (2, 5, 8), (6, 9), (7, 10), (11,))
        assert filling.entries == tuple(range(1, 12))

    def test_universe_includes_gaps(self):
        """Test that the universe runs up to the largest entry even across gaps."""
        filling = young_filling(Partition((2, 1)), 3)
        assert filling.entries == (1, 4, 5)
        assert filling.universe == (1, 2, 3, 4, 5)
        assert young_filling(Partition(()), 2).universe == ()

    def test_invalid_t(self, example_shape):
        """Test that t must be positive."""
        with pytest.raises(DomainError):
            young_filling(example_shape, 0)


class TestYoungComplex:
    """Test t-Young complexes."""

    def test_example_facets(self, example_complex):
        """Test the twelve facets of the (5, 4, 2) complex for t = 3."""
        assert list(example_complex.facets) == EXAMPLE_FACETS
        assert example_complex.is_pure
        assert example_complex.dimension == 4

    def test_empty_shape(self):
        """Test that the empty shape gives the irrelevant complex."""
        assert young_complex(Partition(()), 2).is_irrelevant

    def test_single_row_is_simplex(self):
        """Test that one row is a full simplex."""
        assert young_complex(Partition((4,)), 2) == from_facets([[1, 2, 3, 4]])

    def test_square_for_t_one(self):
        """Test that the 2 x 2 square with t = 1 is the boundary of a triangle."""
        assert young_complex(Partition((2, 2)), 1) == from_facets([[1, 2], [1, 3], [2, 3]])

    def test_single_column(self):
        """Test that a column gives isolated points."""
        assert young_complex(Partition((1, 1, 1)), 2) == from_facets([[1], [3], [5]])


class TestPoset:
    """Test the column poset and the order complex presentation."""

    def test_column_poset(self):
        """Test the Hasse diagram of the (3, 2) poset for t = 2."""
        graph = column_poset(Partition((3, 2)), 2)
        assert set(graph.edges) == {(1, 2), (1, 4), (3, 4), (2, 5), (4, 5)}
        assert graph.nodes[5]["column"] == 3

    def test_order_complex_matches(self):
        """Test that maximal chains give the Young complex."""
        shape = Partition((3, 2))
        assert order_complex_presentation(shape, 2) == young_complex(shape, 2)
        assert order_complex_presentation(shape, 2).facets == ((1, 2, 5), (1, 4, 5), (3, 4, 5))

    def test_shared_entries_rejected(self, example_shape):
        """Test that the poset needs the second part at most t."""
        with pytest.raises(PreconditionError):
            column_poset(example_shape, 3)


class TestIdentifiedPartition:
    """Test the rectangle attached to a squarefree power."""

    def test_rectangle(self):
        """Test (n - kt)^(k + 1)."""
        assert identified_partition(9, 3, 2) == Partition((3, 3, 3, 3))

    def test_no_rectangle(self):
        """Test that n <= kt has no rectangle."""
        with pytest.raises(DomainError):
            identified_partition(6, 3, 2)
