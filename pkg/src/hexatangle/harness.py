"""Census enumeration, table verification and cross-module consistency sweeps."""

from __future__ import annotations

import csv
import io
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .braids.words import BraidWord3
from .braids.surgery import (
    braid_from_surgery,
    filling_to_surgery,
    framed_braid_h1,
    h1_order,
)
from .diagrams import (
    SKELETON,
    component_counts_batch,
    determinant,
    determinants_batch,
    fill,
    filling_component_count,
    jones,
    multilinear_bracket,
    state_sum_bracket,
)
from .filling import BOXES
from .hexcore.classify import Verdict, classify
from .hexcore.symmetry import apply_tuple, symmetry_group
from .hexcore.tables import TableRow, matches_row, tables

CENSUS_SCHEMA_VERSION = 1
WORKERS_ENV = "HEXATANGLE_WORKERS"
EXHAUSTIVE_DEFAULT_MAX_BOUND = 4


def workers_from_env(default: int = 1) -> int:
    raw = os.environ.get(WORKERS_ENV)
    if not raw:
        return default
    n = int(raw)
    if n < 1:
        raise ValueError(f"{WORKERS_ENV} must be a positive integer")
    return n


def _pmap(fn, items: Sequence, workers: int, chunksize: int = 64) -> list:
    """Order-preserving map; results do not depend on the number of workers."""
    if workers <= 1 or len(items) < 2 * chunksize:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=chunksize))


@dataclass(frozen=True)
class RunConfig:
    bound: int
    mode: str = "exhaustive"
    out: str | None = None
    workers: int = 1
    oracle: bool = True
    csv: bool = False
    allow_large: bool = False

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError("bound must be nonnegative")
        if self.mode not in ("exhaustive", "table-rows", "braid-family"):
            raise ValueError(f"unknown sweep mode {self.mode!r}")
        if self.mode == "exhaustive" and self.bound > EXHAUSTIVE_DEFAULT_MAX_BOUND and not self.allow_large:
            raise ValueError(f"exhaustive sweeps above bound {EXHAUSTIVE_DEFAULT_MAX_BOUND} need allow_large")


# --------------------------------------------------------------------------
# oracle


@dataclass(frozen=True)
class OracleValues:
    components: int
    determinant: int
    jones_is_one: bool | None
    h1: int

    @property
    def looks_unknotted(self) -> bool:
        return self.components == 1 and self.jones_is_one is True and self.determinant == 1


def oracle(vals: Sequence[int]) -> OracleValues:
    vals = tuple(vals)
    comps = filling_component_count(vals)
    det = determinant(vals)
    j1 = (jones(vals) == 1) if comps == 1 else None
    return OracleValues(comps, det, j1, h1_order(filling_to_surgery(vals)))


# --------------------------------------------------------------------------
# table verification


@dataclass
class RowReport:
    row_id: str
    instances: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class TableReport:
    bound: int
    rows: list[RowReport]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def instance_count(self) -> int:
        return sum(r.instances for r in self.rows)

    def failures(self) -> list[dict]:
        return [f for r in self.rows for f in r.failures]

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "ok": self.ok,
            "rows": [{"row": r.row_id, "instances": r.instances, "ok": r.ok, "failures": r.failures} for r in self.rows],
        }


def check_table_instance(vals: tuple[int, ...]) -> list[str]:
    problems = []
    o = oracle(vals)
    if o.components != 1:
        problems.append(f"components={o.components}")
    if o.determinant != 1:
        problems.append(f"determinant={o.determinant}")
    if o.jones_is_one is not True:
        problems.append("jones!=1")
    if o.h1 != 1:
        problems.append(f"h1={o.h1}")
    if classify(vals).verdict is not Verdict.TRIVIAL:
        problems.append("classifier verdict not Trivial")
    return problems


def _check_row(args) -> RowReport:
    row_id, bound = args
    row = next(r for r in tables() if r.row_id == row_id)
    rep = RowReport(row_id)
    for vals in sorted(row.instance_set(bound)):
        rep.instances += 1
        problems = check_table_instance(vals)
        if problems:
            rep.failures.append({"filling": dict(zip(BOXES, vals)), "problems": problems})
    return rep


def verify_tables(bound: int, rows: Iterable[TableRow] | None = None, workers: int | None = None) -> TableReport:
    if bound < 1:
        raise ValueError("bound must be at least 1")
    rows = list(rows) if rows is not None else tables()
    w = workers_from_env() if workers is None else workers
    reports = _pmap(_check_row, [(r.row_id, bound) for r in rows], w, chunksize=4)
    return TableReport(bound, reports)


def table_instances(bound: int) -> set[tuple[int, ...]]:
    out: set[tuple[int, ...]] = set()
    for r in tables():
        out |= r.instance_set(bound)
    return out


# --------------------------------------------------------------------------
# orbits and census


def _perm_arrays():
    G = symmetry_group()
    # image[:, perm[i]] = sign * x[:, i]  <=>  image = sign * x[:, inv]
    out = []
    for s in G:
        inv = [0] * 6
        for i, j in enumerate(s.perm):
            inv[j] = i
        out.append((np.array(inv), -1 if s.mirror else 1))
    return out


def orbit_codes(xs: np.ndarray, bound: int) -> np.ndarray:
    """Code of the lexicographically least image of each row of ``xs``."""
    base = 2 * bound + 1
    weights = base ** np.arange(5, -1, -1, dtype=np.int64)
    best = None
    for inv, sign in _perm_arrays():
        img = sign * xs[:, inv]
        code = (img + bound) @ weights
        best = code if best is None else np.minimum(best, code)
    return best


def decode(code: int, bound: int) -> tuple[int, ...]:
    base = 2 * bound + 1
    digits = []
    for _ in range(6):
        code, r = divmod(code, base)
        digits.append(r - bound)
    return tuple(reversed(digits))


def all_fillings(bound: int) -> np.ndarray:
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(*([r] * 6), indexing="ij"), axis=-1)
    return grid.reshape(-1, 6)


def orbit_representatives(bound: int) -> list[tuple[int, ...]]:
    """Lexicographically least member of every orbit inside the box ``|x_i| <= bound``."""
    codes = np.unique(orbit_codes(all_fillings(bound), bound))
    return [decode(int(c), bound) for c in codes]


def orbit_representative_of(vals: Sequence[int]) -> tuple[int, ...]:
    return min(apply_tuple(s, tuple(vals)) for s in symmetry_group())


@dataclass(frozen=True)
class CensusRecord:
    filling: tuple[int, ...]
    verdict: str
    witness: dict | None
    components: int
    determinant: int | None
    jones_is_one: bool | None
    h1: int | None
    orbit_id: str

    @property
    def oracle_unknot(self) -> bool:
        return self.components == 1 and self.jones_is_one is True and self.determinant == 1

    @property
    def mismatch(self) -> bool:
        if self.determinant is None:
            return False
        return (self.verdict == Verdict.TRIVIAL.value) != self.oracle_unknot

    def to_json(self) -> dict:
        return {
            "filling": list(self.filling),
            "verdict": self.verdict,
            "witness": self.witness,
            "components": self.components,
            "determinant": self.determinant,
            "jones_is_one": self.jones_is_one,
            "h1": self.h1,
            "orbit_id": self.orbit_id,
        }

    CSV_FIELDS = ("orbit_id", *BOXES, "verdict", "witness_row", "components", "determinant", "jones_is_one", "h1")

    def csv_row(self) -> list:
        return [
            self.orbit_id,
            *self.filling,
            self.verdict,
            self.witness["row"] if self.witness else "",
            self.components,
            "" if self.determinant is None else self.determinant,
            "" if self.jones_is_one is None else int(self.jones_is_one),
            "" if self.h1 is None else self.h1,
        ]


def _orbit_id(vals: Sequence[int]) -> str:
    return "H(" + ",".join(str(v) for v in vals) + ")"


def census_record(vals: Sequence[int], with_oracle: bool = True) -> CensusRecord:
    vals = tuple(int(v) for v in vals)
    res = classify(vals)
    comps = filling_component_count(vals)
    if with_oracle:
        det = determinant(vals)
        j1 = (jones(vals) == 1) if comps == 1 else None
        h1 = h1_order(filling_to_surgery(vals))
    else:
        det = j1 = h1 = None
    return CensusRecord(
        vals,
        res.verdict.value,
        res.witness.to_json() if res.witness else None,
        comps,
        det,
        j1,
        h1,
        _orbit_id(vals),
    )


def _record_no_oracle(vals):
    return census_record(vals, with_oracle=False)


def enumerate_census(cfg: RunConfig) -> Iterator[CensusRecord]:
    """One record per symmetry orbit, in increasing order of representative."""
    if cfg.mode != "exhaustive":
        raise ValueError("census enumeration runs in exhaustive mode")
    reps = orbit_representatives(cfg.bound)
    fn = census_record if cfg.oracle else _record_no_oracle
    yield from _pmap(fn, reps, cfg.workers)


def census_header(cfg: RunConfig, count: int) -> dict:
    return {
        "schema": "hexatangle-census",
        "version": CENSUS_SCHEMA_VERSION,
        "bound": cfg.bound,
        "oracle": cfg.oracle,
        "box_order": list(BOXES),
        "orbits": count,
    }


def render_census(cfg: RunConfig, records: list[CensusRecord]) -> str:
    if cfg.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CensusRecord.CSV_FIELDS)
        for r in records:
            w.writerow(r.csv_row())
        return buf.getvalue()
    lines = [json.dumps(census_header(cfg, len(records)), sort_keys=True)]
    lines += [json.dumps(r.to_json(), sort_keys=True) for r in records]
    return "\n".join(lines) + "\n"


def write_census(cfg: RunConfig, records: list[CensusRecord] | None = None) -> list[CensusRecord]:
    if records is None:
        records = list(enumerate_census(cfg))
    text = render_census(cfg, records)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return records


def read_census(path: str) -> tuple[dict, list[dict]]:
    with open(path, encoding="utf-8") as fh:
        lines = [json.loads(l) for l in fh if l.strip()]
    return lines[0], lines[1:]


# --------------------------------------------------------------------------
# braid family


@dataclass
class FamilyEntry:
    gamma: int
    braid: str
    framings: tuple[int, int, int]
    closure_h1: int
    link_h1: int
    verdict: str
    witness_row: str | None
    family_row_match: bool
    ok: bool

    def to_json(self) -> dict:
        return self.__dict__ | {"framings": list(self.framings)}


@dataclass
class FamilyReport:
    entries: list[FamilyEntry]
    excluded: list[int]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def to_json(self) -> dict:
        return {"ok": self.ok, "excluded": self.excluded, "entries": [e.to_json() for e in self.entries]}


def family_filling(gamma: int) -> tuple[int, ...]:
    return (3, -2, gamma, 2, 1, -1)


def _row_match_any_symmetry(vals, row: TableRow) -> bool:
    return any(matches_row(apply_tuple(s, vals), row) is not None for s in symmetry_group())


def braid_family_check(gamma_min: int, gamma_max: int) -> FamilyReport:
    """Surgery on ``s1^4 s2^(2g) D^-2`` with framings ``(-4, 1-g, -g)`` for each ``g``."""
    from .hexcore.tables import get_row

    row23 = get_row(3, 23)
    entries, excluded = [], []
    for g in range(gamma_min, gamma_max + 1):
        if abs(g) < 2:
            excluded.append(g)
            continue
        x = family_filling(g)
        s = filling_to_surgery(x)
        fb = braid_from_surgery(s)
        expected_word = f"s1^4 s2^{2 * g} D^-2"
        same_word = fb.text == expected_word and fb.word == BraidWord3.parse(expected_word)
        res = classify(x)
        closure_h1 = framed_braid_h1(fb)
        link_h1 = h1_order(s)
        fam = _row_match_any_symmetry(x, row23)
        ok = (
            same_word
            and fb.framings == (-4, 1 - g, -g)
            and closure_h1 == 1
            and link_h1 == 1
            and res.verdict is Verdict.TRIVIAL
            and fam
        )
        entries.append(
            FamilyEntry(
                g,
                fb.text,
                fb.framings,
                closure_h1,
                link_h1,
                res.verdict.value,
                res.witness.row.row_id if res.witness else None,
                fam,
                ok,
            )
        )
    return FamilyReport(entries, excluded)


# --------------------------------------------------------------------------
# cross-module sweeps


def homology_identity_mismatches(bound: int) -> list[tuple[tuple[int, ...], int, int]]:
    """Knots in ``|x_i| <= bound`` whose determinant differs from the surgery ``|H1|``."""
    xs = all_fillings(bound)
    comps = component_counts_batch(xs)
    xs = xs[comps == 1]
    dets = determinants_batch(xs)
    bad = []
    for x, d in zip(xs.tolist(), dets.tolist()):
        h = h1_order(filling_to_surgery(x))
        if h != d:
            bad.append((tuple(x), d, h))
    return bad


def _bracket_agrees(x: tuple[int, ...]) -> bool:
    return multilinear_bracket(x) == state_sum_bracket(fill(SKELETON, x))


def bracket_mismatches(fillings: Iterable[Sequence[int]], workers: int | None = None) -> list[tuple[int, ...]]:
    """Fillings whose twist-region bracket differs from the all-crossings state sum."""
    xs = [tuple(int(v) for v in x) for x in fillings]
    w = workers_from_env() if workers is None else workers
    ok = _pmap(_bracket_agrees, xs, w, chunksize=16)
    return [x for x, good in zip(xs, ok) if not good]


def random_fillings(n: int, seed: int, min_crossings: int, max_crossings: int, max_abs: int = 6) -> list[tuple[int, ...]]:
    """Random fillings whose total crossing count lies in the given range."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        x = tuple(rng.randint(-max_abs, max_abs) for _ in range(6))
        if min_crossings <= sum(abs(v) for v in x) <= max_crossings:
            out.append(x)
    return out
