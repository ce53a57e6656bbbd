"""Decide whether an integral filling is the unknot by table lookup up to symmetry."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from ..diagrams import filling_component_count
from ..filling import BOXES, as_filling
from .symmetry import HexSymmetry, apply_tuple, symmetry_group
from .tables import Assignment, Const, PlusMinusOne, TableRow, matches_row, tables

_DELTA, _ETA = BOXES.index("delta"), BOXES.index("eta")


class Verdict(enum.Enum):
    TRIVIAL = "Trivial"
    NONTRIVIAL = "Nontrivial"
    NOT_A_KNOT = "NotAKnot"


@dataclass(frozen=True)
class Witness:
    row: TableRow
    symmetry: HexSymmetry
    assignment: Assignment
    image: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "row": self.row.row_id,
            "symmetry": self.symmetry.to_json(),
            "assignment": self.assignment.to_json(),
            "image": dict(zip(BOXES, self.image)),
        }


@dataclass(frozen=True)
class ClassificationResult:
    verdict: Verdict
    witness: Witness | None = None

    def __post_init__(self):
        if self.verdict is Verdict.TRIVIAL and self.witness is None:
            raise ValueError("a trivial verdict needs a witness")

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "witness": self.witness.to_json() if self.witness else None}


@lru_cache(maxsize=None)
def _compiled_rows():
    """Rows bucketed by their (delta, eta) requirement, with constant checks precomputed."""
    buckets: dict[str, list] = {"eta0": [], "d-1e1": []}
    for r in tables():
        consts = tuple((BOXES.index(b), p.value) for b, p in r.patterns.items() if isinstance(p, Const))
        pms = tuple(BOXES.index(b) for b, p in r.patterns.items() if isinstance(p, PlusMinusOne))
        eta = r.patterns["eta"]
        key = "eta0" if isinstance(eta, Const) and eta.value == 0 else "d-1e1"
        buckets[key].append((r, consts, pms))
    return buckets


def find_witness(vals: tuple[int, ...]) -> Witness | None:
    buckets = _compiled_rows()
    for s in symmetry_group():
        y = apply_tuple(s, vals)
        if y[_ETA] == 0:
            cand = buckets["eta0"]
        elif y[_ETA] == 1 and y[_DELTA] == -1:
            cand = buckets["d-1e1"]
        else:
            continue
        for r, consts, pms in cand:
            if any(y[i] != c for i, c in consts) or any(y[i] not in (1, -1) for i in pms):
                continue
            a = matches_row(y, r)
            if a is not None:
                return Witness(r, s, a, y)
    return None


def classify(x) -> ClassificationResult:
    vals = as_filling(x).require_integral()
    if filling_component_count(vals) != 1:
        return ClassificationResult(Verdict.NOT_A_KNOT)
    if 0 not in vals:
        # with every box nonzero a trivial filling needs an adjacent (-1, 1) pair
        if not any(apply_tuple(s, vals)[_DELTA] == -1 and apply_tuple(s, vals)[_ETA] == 1 for s in symmetry_group()):
            return ClassificationResult(Verdict.NONTRIVIAL)
    w = find_witness(vals)
    if w is None:
        return ClassificationResult(Verdict.NONTRIVIAL)
    return ClassificationResult(Verdict.TRIVIAL, w)
