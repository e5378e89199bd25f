"""Graph products of cyclic groups and of one-generator graded algebras, with
exact cross-checks between their central series, enveloping algebras and
Hilbert series."""

__version__ = "0.1.0"

from .complexes import (
    Graph,
    SimplicialComplex,
    clique_complex,
    from_facets,
    full_subcomplex,
    is_chordal,
    is_flag,
    missing_faces,
    one_skeleton,
    reduced_h0_rank,
    substitution_complex,
)
from .errors import BudgetExceededError, ExtractionError, SeriesFormulaError
from .series import IntegerPowerSeries
from .words import GroupElement, GroupSpec, normal_form

__all__ = [
    "BudgetExceededError",
    "ExtractionError",
    "Graph",
    "GroupElement",
    "GroupSpec",
    "IntegerPowerSeries",
    "SeriesFormulaError",
    "SimplicialComplex",
    "clique_complex",
    "from_facets",
    "full_subcomplex",
    "is_chordal",
    "is_flag",
    "missing_faces",
    "normal_form",
    "one_skeleton",
    "reduced_h0_rank",
    "substitution_complex",
]
