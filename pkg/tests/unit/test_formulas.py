"""Tests for χ, the closed-form invariants, the χ inequalities and the reference tables."""

import pytest

from ytc.exceptions import DomainError
from ytc.formulas import (
    REFERENCE_TABLES,
    ChiBounds,
    ChiRegime,
    Linearity,
    ReferenceTable,
    chi,
    chi_lemma_checks,
    generator_count,
    helly_formula,
    krull_formula,
    leray_formula,
    linearity_characterization,
    pd_formula,
    regularity_formula,
    vd_characterization,
)
from ytc.young import Partition


class TestChi:
    """Test the piecewise function and its regimes."""

    @pytest.mark.parametrize(
        "n, k, t, regime, value",
        [
            (0, 1, 1, ChiRegime.ZERO, 0),
            (5, 3, 2, ChiRegime.ZERO, 0),
            (6, 3, 2, ChiRegime.LINEAR, 1),
            (9, 3, 2, ChiRegime.LINEAR, 4),
            (10, 2, 2, ChiRegime.RESIDUE_D, 5),
            (11, 2, 2, ChiRegime.RESIDUE_T, 6),
            (12, 2, 2, ChiRegime.RESIDUE_D, 7),
            (19, 3, 4, ChiRegime.RESIDUE_T, 5),
        ],
    )
    def test_values(self, n, k, t, regime, value):
        """Test values and regime tags."""
        result = chi(n, k, t)
        assert result.regime is regime
        assert result.value == value
        assert int(result) == value

    def test_invalid(self):
        """Test the domain of χ."""
        with pytest.raises(DomainError):
            chi(-1, 1, 1)
        with pytest.raises(DomainError):
            chi(5, 0, 1)
        with pytest.raises(DomainError):
            chi(5, 1, 0)


class TestInvariants:
    """Test the closed forms."""

    def test_projective_dimension(self):
        """Test pd for t >= 2 and for the squarefree Veronese case."""
        assert pd_formula(19, 3, 4) == 5
        assert pd_formula(9, 3, 2) == 4
        assert pd_formula(5, 2, 1) == 4

    def test_projective_dimension_domain(self):
        """Test that k must lie in 1..floor(n/t)."""
        with pytest.raises(DomainError):
            pd_formula(5, 3, 2)
        with pytest.raises(DomainError):
            pd_formula(5, 0, 2)

    def test_krull_dimension(self):
        """Test n - floor(n/t) + k - 1."""
        assert krull_formula(9, 3, 2) == 7
        assert krull_formula(4, 2, 2) == 3
        assert krull_formula(6, 3, 1) == 2

    def test_helly(self, example_shape):
        """Test (r - 1)t - 1 and the single-row convention."""
        assert helly_formula(example_shape, 3) == 5
        assert helly_formula(Partition((4,)), 2) == -1
        with pytest.raises(DomainError):
            helly_formula(Partition(()), 2)

    def test_leray_and_regularity(self):
        """Test that both are one less than pd."""
        assert leray_formula(19, 3, 4) == 4
        assert regularity_formula(9, 3, 2) == 3
        assert leray_formula(6, 3, 2) == 0
        with pytest.raises(DomainError):
            leray_formula(5, 3, 2)

    def test_generator_count(self):
        """Test C(n - k(t - 1), k)."""
        assert generator_count(9, 3, 2) == 20
        assert generator_count(5, 2, 2) == 3
        assert generator_count(3, 2, 2) == 0
        assert generator_count(2, 4, 2) == 0

    def test_vd_characterization(self, example_shape):
        """Test that the second part decides for t >= 2."""
        assert not vd_characterization(example_shape, 3)
        assert vd_characterization(Partition((3, 2)), 2)
        assert vd_characterization(Partition((7,)), 2)
        assert vd_characterization(Partition((3, 3, 3, 3)), 1)

    def test_linearity(self):
        """Test linear quotients and resolutions."""
        assert linearity_characterization(8, 3, 2) == Linearity(True, True)
        assert linearity_characterization(9, 3, 2) == Linearity(False, False)
        assert linearity_characterization(9, 3, 1) == Linearity(True, True)


class TestLemmas:
    """Test the χ inequalities."""

    def test_all_pass(self):
        """Test that no inequality fails on a small range."""
        reports = chi_lemma_checks(ChiBounds(max_n=30, max_k=3, max_t=3))
        assert [r.lemma for r in reports] == ["shift", "monotone", "power-step", "split"]
        for report in reports:
            assert report.passed, report.counterexample
            assert report.cases > 0

    def test_default_bounds(self):
        """Test the default sweep."""
        reports = chi_lemma_checks()
        assert all(r.bounds == ChiBounds() for r in reports)
        assert all(r.passed for r in reports)

    def test_split_full_range_counterexample(self):
        """Test that the split inequality fails once i runs over the whole of 0..n."""
        reports = chi_lemma_checks(ChiBounds(max_n=12, max_k=2, max_t=2), full_range=True)
        assert [r.lemma for r in reports][-1] == "split-full-range"
        wide = reports[-1]
        assert not wide.passed
        assert wide.counterexample == {"n": 4, "k": 2, "t": 2, "i": 4}
        assert chi(0, 2, 2).value + chi(3, 1, 2).value == 2 > chi(4, 2, 2).value
        assert all(r.passed for r in reports[:-1])
        assert "split-full-range" not in [r.lemma for r in chi_lemma_checks()]

    def test_bounds_validated(self):
        """Test that k and t start at one."""
        with pytest.raises(ValueError):
            ChiBounds(max_k=0)


class TestReferenceTables:
    """Test the published values."""

    def test_tables_match(self):
        """Test that no entry of any table disagrees with its formula."""
        assert len(REFERENCE_TABLES) == 4
        assert sum(len(table.values) for table in REFERENCE_TABLES) == 65
        for table in REFERENCE_TABLES:
            assert table.mismatches() == []

    def test_entries(self):
        """Test entry indexing by n."""
        table = REFERENCE_TABLES[0]
        assert table.entries[12] == 1
        assert table.entries[19] == 5

    def test_mismatch_reported(self):
        """Test that a wrong value is reported with both numbers."""
        table = ReferenceTable("pd", 3, 4, 12, (1, 2, 9))
        assert table.mismatches() == [(14, 9, 3)]
