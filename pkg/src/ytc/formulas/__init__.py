"""Closed-form invariants, characterizations and the χ inequalities."""

from .chi import ChiRegime, ChiValue, chi
from .invariants import (
    Linearity,
    generator_count,
    helly_formula,
    krull_formula,
    leray_formula,
    linearity_characterization,
    pd_formula,
    regularity_formula,
    vd_characterization,
)
from .lemmas import ChiBounds, LemmaReport, chi_lemma_checks
from .tables import REFERENCE_TABLES, ReferenceTable

__all__ = [
    "REFERENCE_TABLES",
    "ChiBounds",
    "ChiRegime",
    "ChiValue",
    "LemmaReport",
    "Linearity",
    "ReferenceTable",
    "chi",
    "chi_lemma_checks",
    "generator_count",
    "helly_formula",
    "krull_formula",
    "leray_formula",
    "linearity_characterization",
    "pd_formula",
    "regularity_formula",
    "vd_characterization",
]
