"""Filling model, symmetry group, unknot tables and the table-driven classifier."""

from ..filling import BOXES, OPPOSITE, HexFilling, Unfilled, adjacent
from .classify import ClassificationResult, Verdict, Witness, classify, find_witness
from .symmetry import IDENTITY, MIRROR, HexSymmetry, apply, apply_tuple, orbit, orbit_representative, symmetry_group
from .tables import (
    Affine,
    Assignment,
    Const,
    Free,
    PlusMinusOne,
    TableRow,
    export_tables,
    export_tables_json,
    get_row,
    matches_row,
    printed_row,
    row_admits_all_large,
    tables,
)

__all__ = [
    "BOXES", "OPPOSITE", "HexFilling", "Unfilled", "adjacent",
    "ClassificationResult", "Verdict", "Witness", "classify", "find_witness",
    "IDENTITY", "MIRROR", "HexSymmetry", "apply", "apply_tuple", "orbit", "orbit_representative", "symmetry_group",
    "Affine", "Assignment", "Const", "Free", "PlusMinusOne", "TableRow",
    "export_tables", "export_tables_json", "get_row", "matches_row", "printed_row", "row_admits_all_large", "tables",
]
