"""Machine-readable parameter tables of unknotting fillings.

Rows are kept as text in their printed column order and parsed into per-box
patterns, so each row can be audited against its source line directly.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Union

from ..filling import BOXES

TABLES_SCHEMA_VERSION = 1

COLUMNS = {
    1: ("eta", "beta", "alpha", "delta", "epsilon", "gamma"),
    2: ("eta", "alpha", "beta", "gamma", "delta", "epsilon"),
    3: ("delta", "eta", "alpha", "beta", "gamma", "epsilon"),
}

_TABLE_TEXT = {
    1: """
0 ±1 ±1 0 0 ±1
0 0 ±1 0 ±1 ±1
0 1 ±1 0 -3 -2
0 1 ±1 0 -2 -3
0 1 ±1 0 -1 gamma
0 1 ±1 0 epsilon -1
0 -2 ±1 0 1 -3
0 -3 ±1 0 1 -2
0 beta ±1 0 1 -1
0 -1 ±1 0 1 gamma
0 0 1 1 -1 -2
0 0 1 1 -2 -1
0 0 1 -1 ±1-gamma gamma
0 0 -1 1 ±1-gamma gamma
0 0 -1 -1 1 2
0 0 -1 -1 2 1
0 0 1 -1 1 -2
0 0 1 -2 1 -1
0 0 1 ±1-gamma -1 gamma
0 0 -1 ±1-gamma 1 gamma
0 0 -1 1 -1 2
0 0 -1 2 -1 1
0 0 1 -2 -1 1
0 0 1 -1 -2 1
0 0 1 delta ±1-delta -1
0 0 -1 delta ±1-delta 1
0 0 -1 2 1 -1
0 0 -1 1 2 -1
""",
    2: """
0 1 -1 gamma -1 ±1-gamma
0 1 -1 -2 -2 -3
0 1 -1 -3 -2 -2
0 1 -1 -1 -3 -2
0 1 -1 -2 -3 -1
0 1 -1 -1 -4 -1
0 1 -1 gamma -2 -1
0 1 -1 -1 -2 epsilon
0 1 -1 1 1 2
0 1 -1 2 1 1
0 1 -1 1 2 1
0 1 beta gamma -1 ±1-gamma
0 1 -3 1 -2 epsilon
0 1 -3 gamma -2 1
0 1 -3 3 -2 2
0 1 -3 2 -2 3
0 1 -2 2 -3 1
0 1 -2 1 -3 2
0 1 -1 1 2 1
0 1 -1 2 1 1
0 1 -2 gamma -3-gamma 1
0 1 -3 gamma -2 1
0 1 beta -1 -2 1
0 1 beta -2 -1 1
0 1 -3 -2 delta 1
0 1 -2 gamma -gamma-1 1
0 1 -3 -3 -4 1
0 1 -3 -4 -3 1
0 1 -4 -2 -3 1
0 1 -4 -3 -2 1
0 1 -5 -2 -2 1
0 1 beta 1 -2 -1
0 1 -1 gamma -2 -1
0 1 1 3 2 -1
0 1 2 2 1 -1
0 1 1 4 1 -1
0 1 beta 2 -1 -1
0 1 1 2 delta -1
0 1 -1 -1 -4 -1
0 1 -2 -1 -2 -1
0 1 -1 -2 -3 -1
0 1 -1 1 2 1
0 1 -1 1 1 2
0 1 -2 1 -3-epsilon epsilon
0 1 -3 1 -2 epsilon
0 1 beta 1 -2 -1
0 1 beta 1 -1 -2
0 1 -3 1 delta -2
0 1 -2 1 -epsilon-1 epsilon
0 1 -3 1 -4 -3
0 1 -3 1 -3 -4
0 1 -4 1 -3 -2
0 1 -4 1 -2 -3
0 1 -5 1 -2 -2
0 1 beta -1 -2 1
0 1 -1 -1 -2 epsilon
0 1 1 -1 2 3
0 1 2 -1 1 2
0 1 1 -1 1 4
0 1 beta -1 -1 2
0 1 1 -1 delta 2
0 1 -1 -1 -4 -1
0 1 -2 -1 -2 -1
0 1 -1 -1 -3 -2
""",
    3: """
-1 1 1 beta -2 2
-1 1 1 -1 -4 2
-1 1 1 2 -1 2
-1 1 1 -2 -3 2
-1 1 -1 2 gamma -2
-1 1 -1 4 1 -2
-1 1 -1 1 -2 -2
-1 1 -1 3 2 -2
-1 1 2 2 -1 1
-1 1 2 -1 -2 1
-1 1 2 1 -2 1
-1 1 -2 1 -2 -1
-1 1 -2 2 1 -1
-1 1 -2 2 -1 -1
-1 1 alpha -alpha+1 -2 1
-1 1 2 3 -2 3
-1 1 2 5 -2 2
-1 1 3 4 -2 2
-1 1 1 3 -2 4
-1 1 1 4 -2 3
-1 1 -1 2 -2 epsilon
-1 1 1 beta -2 2
-1 1 alpha 3 -2 2
-1 1 alpha 3-alpha -2 1
-1 1 -1 1 -2 -2
-1 1 -2 1 -2 -1
-1 1 1 2 -2 3
-1 1 1 2 -2 4
-1 1 1 2 -2 epsilon
-1 1 alpha 2 -1-alpha -1
-1 1 -2 2 -3 -3
-1 1 -2 2 -5 -2
-1 1 -3 2 -4 -2
-1 1 -1 2 -3 -4
-1 1 -1 2 -4 -3
-1 1 alpha 1 -3 -2
-1 1 -1 2 gamma -2
-1 1 alpha 2 -3-alpha -1
-1 1 1 2 -1 2
-1 1 2 2 -1 1
""",
}

#: (table, line) -> (corrected text, reason).  The printed text of line 36 of
#: the third table gives two-component links for every alpha; all other rows
#: of its block have beta = 2, and with beta = 2 the row is an unknot family.
CORRECTIONS = {
    (3, 36): (
        "-1 1 alpha 2 -3 -2",
        "printed beta=1 yields links (even determinant) for every alpha; "
        "the row belongs to the beta=2 family whose 2-bridge numerator is 1 at gamma=-3, epsilon=-2",
    ),
}


# --------------------------------------------------------------------------
# cell patterns


@dataclass(frozen=True)
class Const:
    value: int

    def values(self, env):
        return {self.value: None}

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class PlusMinusOne:
    def values(self, env):
        return {1: 1, -1: -1}

    def __str__(self):
        return "±1"


@dataclass(frozen=True)
class Free:
    var: str

    def values(self, env):
        return {env[self.var]: None}

    def __str__(self):
        return self.var


@dataclass(frozen=True)
class Affine:
    """``coef*var + const``; ``const=None`` means an independent ``±1``."""

    var: str
    coef: int
    const: int | None

    def values(self, env):
        base = self.coef * env[self.var]
        if self.const is None:
            return {base + 1: 1, base - 1: -1}
        return {base + self.const: None}

    def candidates(self, value: int) -> list[int]:
        consts = (1, -1) if self.const is None else (self.const,)
        out = []
        for c in consts:
            q, r = divmod(value - c, self.coef)
            if r == 0:
                out.append(q)
        return out

    def __str__(self):
        c = "±1" if self.const is None else str(self.const)
        v = self.var if self.coef == 1 else ("-" + self.var if self.coef == -1 else f"{self.coef}*{self.var}")
        return f"{c}+{v}" if not v.startswith("-") else f"{c}{v}"


Pattern = Union[Const, PlusMinusOne, Free, Affine]

_VAR = r"(alpha|beta|gamma|delta|epsilon|eta)"


def parse_cell(cell: str) -> Pattern:
    cell = cell.strip()
    if re.fullmatch(r"[-+]?\d+", cell):
        return Const(int(cell))
    if cell == "±1":
        return PlusMinusOne()
    if re.fullmatch(_VAR, cell):
        return Free(cell)
    m = re.fullmatch(r"(±1|[-+]?\d+)-" + _VAR, cell)
    if m:
        return Affine(m.group(2), -1, None if m.group(1) == "±1" else int(m.group(1)))
    m = re.fullmatch(r"-" + _VAR + r"([-+]\d+)", cell)
    if m:
        return Affine(m.group(1), -1, int(m.group(2)))
    raise ValueError(f"unrecognised table cell {cell!r}")


# --------------------------------------------------------------------------
# rows


@dataclass(frozen=True)
class Assignment:
    """Values of the free variables and the sign picked for each ``±1`` cell."""

    variables: dict[str, int] = field(default_factory=dict)
    signs: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"variables": dict(self.variables), "signs": dict(self.signs)}


@dataclass(frozen=True, eq=False)
class TableRow:
    table_id: int
    line: int
    patterns: dict[str, Pattern]
    printed: str
    text: str
    note: str | None = None

    @property
    def row_id(self) -> str:
        return f"T{self.table_id}.{self.line}"

    @property
    def columns(self) -> tuple[str, ...]:
        return COLUMNS[self.table_id]

    @property
    def variables(self) -> tuple[str, ...]:
        vs = {p.var for p in self.patterns.values() if isinstance(p, (Free, Affine))}
        return tuple(sorted(vs, key=BOXES.index))

    def _cell_values(self, env) -> list[dict[int, int | None]]:
        return [self.patterns[b].values(env) for b in BOXES]

    def instantiate(self, env: dict[str, int]) -> list[tuple[tuple[int, ...], Assignment]]:
        """All fillings for one assignment of the free variables (``±1`` expanded)."""
        per_box = self._cell_values(env)
        out = []
        for combo in itertools.product(*(list(d.items()) for d in per_box)):
            vals = tuple(v for v, _ in combo)
            signs = {b: s for b, (_, s) in zip(BOXES, combo) if s is not None}
            out.append((vals, Assignment(dict(env), signs)))
        return out

    def instances(self, bound: int) -> Iterator[tuple[tuple[int, ...], Assignment]]:
        vs = self.variables
        for vals in itertools.product(range(-bound, bound + 1), repeat=len(vs)):
            yield from self.instantiate(dict(zip(vs, vals)))

    def instance_set(self, bound: int) -> set[tuple[int, ...]]:
        return {v for v, _ in self.instances(bound)}

    def to_json(self) -> dict:
        return {
            "id": self.row_id,
            "table": self.table_id,
            "line": self.line,
            "columns": list(self.columns),
            "cells": {b: str(self.patterns[b]) for b in self.columns},
            "text": self.text,
            "printed": self.printed,
            "note": self.note,
        }


def matches_row(x, r: TableRow) -> Assignment | None:
    """Solve the row's constraints for the filling ``x``; ``None`` if impossible."""
    vals = dict(zip(BOXES, tuple(x)))
    candidates: dict[str, set[int] | None] = {v: None for v in r.variables}
    for b in BOXES:
        p = r.patterns[b]
        v = vals[b]
        if isinstance(p, Const):
            if v != p.value:
                return None
        elif isinstance(p, PlusMinusOne):
            if v not in (1, -1):
                return None
        elif isinstance(p, Free):
            prev = candidates[p.var]
            candidates[p.var] = {v} if prev is None else prev & {v}
            if not candidates[p.var]:
                return None
    for b in BOXES:
        p = r.patterns[b]
        if isinstance(p, Affine) and candidates[p.var] is None:
            candidates[p.var] = set(p.candidates(vals[b]))
    names = list(candidates)
    for choice in itertools.product(*(sorted(candidates[n]) for n in names)):
        env = dict(zip(names, choice))
        signs = {}
        for b, opts in zip(BOXES, r._cell_values(env)):
            if vals[b] not in opts:
                break
            if opts[vals[b]] is not None:
                signs[b] = opts[vals[b]]
        else:
            return Assignment(env, signs)
    return None


@lru_cache(maxsize=None)
def _rows() -> tuple[TableRow, ...]:
    out = []
    for tid in (1, 2, 3):
        cols = COLUMNS[tid]
        for i, line in enumerate(_TABLE_TEXT[tid].strip().splitlines(), 1):
            printed = " ".join(line.split())
            text, note = CORRECTIONS.get((tid, i), (printed, None))
            cells = text.split()
            if len(cells) != 6:
                raise ValueError(f"table {tid} line {i} has {len(cells)} cells")
            pats = {b: parse_cell(c) for b, c in zip(cols, cells)}
            out.append(TableRow(tid, i, pats, printed, text, note))
    return tuple(out)


def tables() -> list[TableRow]:
    return list(_rows())


def get_row(table_id: int, line: int) -> TableRow:
    for r in _rows():
        if r.table_id == table_id and r.line == line:
            return r
    raise KeyError((table_id, line))


def printed_row(table_id: int, line: int) -> TableRow:
    """The row exactly as printed, ignoring any correction."""
    r = get_row(table_id, line)
    cells = r.printed.split()
    return TableRow(table_id, line, {b: parse_cell(c) for b, c in zip(r.columns, cells)}, r.printed, r.printed)


def export_tables() -> dict:
    return {
        "schema": "hexatangle-tables",
        "version": TABLES_SCHEMA_VERSION,
        "box_order": list(BOXES),
        "rows": [r.to_json() for r in _rows()],
    }


def export_tables_json(indent: int | None = 2) -> str:
    return json.dumps(export_tables(), indent=indent, ensure_ascii=False)


def row_admits_all_large(r: TableRow, threshold: int = 6, search: int = 20) -> bool:
    """Whether some instance has every entry of absolute value ``>= threshold``."""
    for p in r.patterns.values():
        if isinstance(p, (Const,)) and abs(p.value) < threshold:
            return False
        if isinstance(p, PlusMinusOne) and threshold > 1:
            return False
    for vals, _ in r.instances(search):
        if all(abs(v) >= threshold for v in vals):
            return True
    return False
