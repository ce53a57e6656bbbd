"""Planar diagrams of filled hexatangles and exact diagram invariants.

Crossings use the unoriented planar-diagram (PD) convention: the four arc
labels of a crossing are listed counterclockwise, starting from an end of the
under-strand, so that ``a-c`` is the under-strand and ``b-d`` the over-strand.
The A-smoothing joins ``a-b`` and ``c-d``.  Loops carrying no crossing at all
are kept as a separate ``free_loops`` count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .filling import BOXES, OPPOSITE, HexFilling, as_filling
from .laurent import A, DELTA, ONE, ZERO, LaurentPoly, cyclo8_abs

PD_FORMAT_VERSION = 1
CORNERS = ("NW", "SW", "SE", "NE")


# --------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(v) for v in c) for c in self.crossings))
        if self.free_loops < 0:
            raise ValueError("free_loops must be nonnegative")
        for c in self.crossings:
            if len(c) != 4:
                raise ValueError(f"crossing {c} does not have four arcs")
        counts: dict[int, int] = {}
        for c in self.crossings:
            for a in c:
                counts[a] = counts.get(a, 0) + 1
        bad = {a: n for a, n in counts.items() if n != 2}
        if bad:
            raise ValueError(f"arcs not used exactly twice: {bad}")
        if counts and sorted(counts) != list(range(len(counts))):
            raise ValueError("arc labels must be 0..n-1")

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_arcs(self) -> int:
        return 2 * len(self.crossings)

    # -- orientation ------------------------------------------------------

    def _arc_ends(self) -> dict[int, list[tuple[int, int]]]:
        ends: dict[int, list[tuple[int, int]]] = {}
        for k, c in enumerate(self.crossings):
            for pos, a in enumerate(c):
                ends.setdefault(a, []).append((k, pos))
        return ends

    def traverse(self) -> list[list[tuple[int, int]]]:
        """Orient every component; each is a list of ``(crossing, entry position)`` visits."""
        ends = self._arc_ends()
        seen: set[tuple[int, int]] = set()
        comps = []
        for k0 in range(len(self.crossings)):
            for p0 in (0, 1):
                if (k0, p0) in seen or (k0, (p0 + 2) % 4) in seen:
                    continue
                comp = []
                k, p = k0, p0
                while (k, p) not in seen:
                    seen.add((k, p))
                    seen.add((k, (p + 2) % 4))
                    comp.append((k, p))
                    out = (p + 2) % 4
                    arc = self.crossings[k][out]
                    e1, e2 = ends[arc]
                    k, p = e2 if e1 == (k, out) else e1
                comps.append(comp)
        return comps

    def component_count(self) -> int:
        return len(self.traverse()) + self.free_loops

    def signs(self) -> list[int]:
        """Crossing signs under the orientation chosen by :meth:`traverse`."""
        under_in: dict[int, int] = {}
        over_in: dict[int, int] = {}
        for comp in self.traverse():
            for k, p in comp:
                (under_in if p % 2 == 0 else over_in)[k] = p
        return [1 if (under_in[k], over_in[k]) in ((0, 3), (2, 1)) else -1 for k in range(len(self.crossings))]

    def writhe(self) -> int:
        return sum(self.signs())

    # -- serialisation ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "format": "pd",
            "version": PD_FORMAT_VERSION,
            "crossings": [list(c) for c in self.crossings],
            "signs": self.signs(),
            "free_loops": self.free_loops,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict | str) -> LinkDiagram:
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("format") != "pd" or data.get("version") != PD_FORMAT_VERSION:
            raise ValueError("unsupported diagram document")
        return cls(tuple(tuple(c) for c in data["crossings"]), int(data.get("free_loops", 0)))


class _Wiring:
    """Scratch builder: points joined by plain wire segments, plus crossings.

    Arcs are the wire paths between crossing ports; wire cycles that meet
    no crossing become free loops.
    """

    def __init__(self):
        self.parent: dict = {}
        self.crossings: list[list] = []

    def _find(self, u):
        self.parent.setdefault(u, u)
        while self.parent[u] != u:
            self.parent[u] = self.parent[self.parent[u]]
            u = self.parent[u]
        return u

    def wire(self, u, v):
        self.parent[self._find(u)] = self._find(v)

    def crossing(self, ports: Sequence) -> None:
        """Add a crossing whose four port points are given in PD order."""
        for q in ports:
            self._find(q)
        self.crossings.append(list(ports))

    def build(self) -> LinkDiagram:
        ports = {q for c in self.crossings for q in c}
        label: dict = {}
        for c in self.crossings:
            for q in c:
                r = self._find(q)
                if r not in label:
                    label[r] = len(label)
        roots_with_ports = {self._find(q) for q in ports}
        free = {self._find(u) for u in self.parent} - roots_with_ports
        pd = tuple(tuple(label[self._find(q)] for q in c) for c in self.crossings)
        return LinkDiagram(pd, len(free))


def _twist_crossing(w: _Wiring, key, positive: bool):
    """One horizontal twist crossing with corner points ``(key, corner)``."""
    P = {c: (key, c) for c in CORNERS}
    if positive:
        w.crossing([P["SW"], P["SE"], P["NE"], P["NW"]])
    else:
        w.crossing([P["NW"], P["SW"], P["SE"], P["NE"]])
    return P


def _fill_box(w: _Wiring, corner, box_key, n: int):
    """Place ``n`` horizontal twists between the corner points ``corner(c)``."""
    if n == 0:
        w.wire(corner("NW"), corner("NE"))
        w.wire(corner("SW"), corner("SE"))
        return
    north, south = corner("NW"), corner("SW")
    for j in range(abs(n)):
        P = _twist_crossing(w, (box_key, j), n > 0)
        w.wire(north, P["NW"])
        w.wire(south, P["SW"])
        north, south = P["NE"], P["SE"]
    w.wire(north, corner("NE"))
    w.wire(south, corner("SE"))


# --------------------------------------------------------------------------
# the hexatangle skeleton


@dataclass(frozen=True, eq=False)
class HexSkeleton:
    """Six twist slots on the octahedral 4-valent graph.

    ``frames[box]`` names the neighbouring box reached from each corner of
    the slot, in the order NW, SW, SE, NE (counterclockwise seen from outside
    the sphere).  Twists in a slot run from the W side to the E side.
    """

    frames: dict[str, tuple[str, str, str, str]]
    letters: dict[str, str] = field(default_factory=lambda: dict(zip(BOXES, "ABCDEF")))

    def __post_init__(self):
        if set(self.frames) != set(BOXES):
            raise ValueError("skeleton must have exactly the six boxes")
        for box, nbrs in self.frames.items():
            expected = set(BOXES) - {box, OPPOSITE[box]}
            if set(nbrs) != expected or len(nbrs) != 4:
                raise ValueError(f"slot {box} must touch exactly its four adjacent boxes")
            for other in nbrs:
                if box not in self.frames[other]:
                    raise ValueError(f"adjacency {box}-{other} is not symmetric")

    def corner_toward(self, box: str, other: str) -> str:
        return CORNERS[self.frames[box].index(other)]

    def wire_skeleton(self, w: _Wiring) -> None:
        for box in BOXES:
            for corner, other in zip(CORNERS, self.frames[box]):
                if box < other:
                    w.wire((box, corner), (other, self.corner_toward(other, box)))


#: calibrated against known unknots, a Montesinos identification and a
#: closed 3-braid identification; see tests/test_calibration.py
SKELETON = HexSkeleton(
    frames={
        "alpha": ("beta", "delta", "eta", "gamma"),
        "epsilon": ("eta", "delta", "beta", "gamma"),
        "beta": ("delta", "alpha", "gamma", "epsilon"),
        "eta": ("delta", "epsilon", "gamma", "alpha"),
        "gamma": ("alpha", "eta", "epsilon", "beta"),
        "delta": ("alpha", "beta", "epsilon", "eta"),
    }
)


def fill(skel: HexSkeleton, x) -> LinkDiagram:
    x = as_filling(x)
    vals = x.require_integral()
    w = _Wiring()
    skel.wire_skeleton(w)
    for box, n in zip(BOXES, vals):
        _fill_box(w, lambda c, b=box: (b, c), ("box", box), n)
    return w.build()


def twist_tangle_diagram(n: int, closure: str = "numerator") -> LinkDiagram:
    """Closure of the standalone ``n``-twist tangle: ``numerator`` joins NW-NE and SW-SE."""
    w = _Wiring()
    _fill_box(w, lambda c: ("end", c), "t", n)
    if closure == "numerator":
        w.wire(("end", "NW"), ("end", "NE"))
        w.wire(("end", "SW"), ("end", "SE"))
    elif closure == "denominator":
        w.wire(("end", "NW"), ("end", "SW"))
        w.wire(("end", "NE"), ("end", "SE"))
    else:
        raise ValueError(closure)
    return w.build()


def component_count(d: LinkDiagram) -> int:
    return d.component_count()


# --------------------------------------------------------------------------
# Kauffman bracket


@dataclass(frozen=True)
class BracketVector:
    """Bracket of a 2-string tangle written as ``c0*<0> + cinf*<inf>``."""

    c0: LaurentPoly
    cinf: LaurentPoly

    def numerator(self) -> LaurentPoly:
        return self.c0 * DELTA + self.cinf

    def denominator(self) -> LaurentPoly:
        return self.c0 + self.cinf * DELTA


@lru_cache(maxsize=None)
def twist_bracket(n: int) -> BracketVector:
    c0, ci = ONE, ZERO
    step = 1 if n > 0 else -1
    for _ in range(abs(n)):
        # one more crossing: A-smoothing continues the 0 side
        c0, ci = c0.shift(step), c0.shift(-step) - ci.shift(-3 * step)
    return BracketVector(c0, ci)


def _state_loops(skel: HexSkeleton) -> np.ndarray:
    """Loop count of the skeleton for each of the 64 basis insertions.

    Bit ``i`` of the state index picks the infinity tangle for ``BOXES[i]``.
    """
    out = np.zeros(64, dtype=np.int64)
    for s in range(64):
        w = _Wiring()
        skel.wire_skeleton(w)
        for i, box in enumerate(BOXES):
            if s >> i & 1:
                w.wire((box, "NW"), (box, "SW"))
                w.wire((box, "NE"), (box, "SE"))
            else:
                w.wire((box, "NW"), (box, "NE"))
                w.wire((box, "SW"), (box, "SE"))
        out[s] = w.build().free_loops
    return out


@lru_cache(maxsize=None)
def skeleton_loops(skel: HexSkeleton = SKELETON) -> tuple[int, ...]:
    return tuple(int(v) for v in _state_loops(skel))


def _dense(p: LaurentPoly) -> tuple[int, np.ndarray]:
    if not p:
        return 0, np.zeros(1, dtype=object)
    lo, hi = p.min_degree(), p.max_degree()
    arr = np.zeros(hi - lo + 1, dtype=object)
    for e, v in p.terms():
        arr[e - lo] = v
    return lo, arr


def _from_dense(lo: int, arr) -> LaurentPoly:
    return LaurentPoly((lo + i, int(v)) for i, v in enumerate(arr) if v)


@lru_cache(maxsize=None)
def _delta_pow_dense(k: int):
    return _dense(DELTA ** k)


@lru_cache(maxsize=4096)
def _twist_dense(n: int):
    v = twist_bracket(n)
    return _dense(v.c0), _dense(v.cinf)


def multilinear_bracket(x, skel: HexSkeleton = SKELETON) -> LaurentPoly:
    vals = as_filling(x).require_integral()
    loops = skeleton_loops(skel)
    tw = [_twist_dense(n) for n in vals]
    by_loops: dict[int, tuple[int, np.ndarray]] = {}
    for s in range(64):
        lo, acc = 0, np.ones(1, dtype=object)
        for i in range(6):
            l2, a2 = tw[i][s >> i & 1]
            if not a2.any():
                break
            lo += l2
            acc = np.convolve(acc, a2)
        else:
            L = loops[s]
            if L in by_loops:
                blo, bacc = by_loops[L]
                by_loops[L] = _add_dense(blo, bacc, lo, acc)
            else:
                by_loops[L] = (lo, acc)
    total = ZERO
    for L, (lo, acc) in by_loops.items():
        dlo, darr = _delta_pow_dense(L - 1)
        total = total + _from_dense(lo + dlo, np.convolve(acc, darr))
    return total


def _add_dense(lo1, a1, lo2, a2):
    lo = min(lo1, lo2)
    hi = max(lo1 + len(a1), lo2 + len(a2))
    out = np.zeros(hi - lo, dtype=object)
    out[lo1 - lo : lo1 - lo + len(a1)] += a1
    out[lo2 - lo : lo2 - lo + len(a2)] += a2
    return lo, out


def state_sum_bracket(d: LinkDiagram, chunk: int = 1 << 15) -> LaurentPoly:
    """Brute-force Kauffman state sum over all ``2^n`` smoothings.

    Half-edges are the ``4n`` crossing positions; pairing each position with
    the other end of its arc, then with its smoothing partner, gives a
    permutation whose cycles come in pairs, one pair per state loop.
    """
    n = len(d.crossings)
    if n == 0:
        return DELTA ** (d.free_loops - 1) if d.free_loops else ONE
    X = np.array(d.crossings, dtype=np.int64)
    flat = X.reshape(-1)
    m = 4 * n
    # E: position -> other position carrying the same arc
    E = np.empty(m, dtype=np.int64)
    first: dict[int, int] = {}
    for i, a in enumerate(flat.tolist()):
        if a in first:
            E[i] = first[a]
            E[first[a]] = i
        else:
            first[a] = i
    base = np.arange(n, dtype=np.int64) * 4
    # smoothing partner for bit=1 (A: a-b, c-d) and bit=0 (a-d, b-c)
    partner_A = np.array([1, 0, 3, 2], dtype=np.int64)
    partner_B = np.array([3, 2, 1, 0], dtype=np.int64)
    steps = max(1, int(np.ceil(np.log2(m))) + 1)
    counts: dict[tuple[int, int], int] = {}
    total_states = 1 << n
    for start in range(0, total_states, chunk):
        states = np.arange(start, min(start + chunk, total_states), dtype=np.int64)
        bits = (states[:, None] >> np.arange(n, dtype=np.int64)[None, :]) & 1
        b4 = np.repeat(bits, 4, axis=1).astype(bool)
        local = np.tile(np.arange(4, dtype=np.int64), n)
        S = np.where(b4, partner_A[local], partner_B[local]) + np.repeat(base, 4)[None, :]
        # sigma = S o E
        sigma = np.take_along_axis(S, np.broadcast_to(E, S.shape), axis=1)
        lab = np.broadcast_to(np.arange(m, dtype=np.int64), S.shape).copy()
        perm = sigma
        for _ in range(steps):
            lab = np.minimum(lab, np.take_along_axis(lab, perm, axis=1))
            perm = np.take_along_axis(perm, perm, axis=1)
        cycles = (lab == np.arange(m)[None, :]).sum(axis=1)
        loops = cycles // 2 + d.free_loops
        a_exp = 2 * bits.sum(axis=1) - n
        key = a_exp * 4096 + loops
        uniq, cnt = np.unique(key, return_counts=True)
        for k, c in zip(uniq.tolist(), cnt.tolist()):
            ae, L = divmod(k, 4096)
            counts[(ae, L)] = counts.get((ae, L), 0) + c
    total = ZERO
    for (ae, L), c in counts.items():
        total = total + (DELTA ** (L - 1)).shift(ae) * c
    return total


def diagram_bracket(d: LinkDiagram) -> LaurentPoly:
    return state_sum_bracket(d)


def bracket(x, method: str = "multilinear", skel: HexSkeleton = SKELETON) -> LaurentPoly:
    if method == "multilinear":
        return multilinear_bracket(x, skel)
    if method == "statesum":
        return state_sum_bracket(fill(skel, x))
    raise ValueError(f"unknown method {method!r}")


def normalize_jones(br: LaurentPoly, writhe: int) -> LaurentPoly:
    """``(-A^3)^(-w) * <K>``."""
    sign = -1 if writhe % 2 else 1
    return br.shift(-3 * writhe) * sign


def diagram_jones(d: LinkDiagram) -> LaurentPoly:
    if d.component_count() != 1:
        raise ValueError("Jones polynomial is only provided for knots")
    return normalize_jones(state_sum_bracket(d), d.writhe())


def hex_writhe(x, skel: HexSkeleton = SKELETON) -> int:
    return fill(skel, x).writhe()


def jones(x, skel: HexSkeleton = SKELETON) -> LaurentPoly:
    x = as_filling(x)
    d = fill(skel, x)
    if d.component_count() != 1:
        raise ValueError(f"{x} is not a knot")
    return normalize_jones(multilinear_bracket(x, skel), d.writhe())


# --------------------------------------------------------------------------
# determinant and component counts


def bracket_determinant(br: LaurentPoly) -> int:
    return cyclo8_abs(br.mod_cyclotomic8())


def determinant(x, skel: HexSkeleton = SKELETON) -> int:
    """``|<K>|`` at a primitive 8th root of unity, computed in ``Z[A]/(A^4+1)``."""
    return bracket_determinant(multilinear_bracket(x, skel))


def diagram_determinant(d: LinkDiagram) -> int:
    return bracket_determinant(state_sum_bracket(d))


@lru_cache(maxsize=None)
def parity_components(skel: HexSkeleton = SKELETON) -> tuple[int, ...]:
    """Component count indexed by the parity pattern (bit ``i`` = parity of box ``i``)."""
    return tuple(fill(skel, [(s >> i) & 1 for i in range(6)]).component_count() for s in range(64))


def filling_component_count(x, skel: HexSkeleton = SKELETON) -> int:
    vals = as_filling(x).require_integral()
    idx = sum((v & 1) << i for i, v in enumerate(vals))
    return parity_components(skel)[idx]


# -- vectorised determinants ----------------------------------------------

def _cyclo_twist_table(lo: int, hi: int) -> np.ndarray:
    """``T[n - lo, side] -> 4 ints``: twist coefficients reduced mod ``A^4+1``."""
    T = np.zeros((hi - lo + 1, 2, 4), dtype=np.int64)
    for n in range(lo, hi + 1):
        v = twist_bracket(n)
        T[n - lo, 0] = v.c0.mod_cyclotomic8()
        T[n - lo, 1] = v.cinf.mod_cyclotomic8()
    return T


def _cyclo_mul_batch(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    x0, x1, x2, x3 = (x[..., i] for i in range(4))
    y0, y1, y2, y3 = (y[..., i] for i in range(4))
    return np.stack(
        [
            x0 * y0 - x1 * y3 - x2 * y2 - x3 * y1,
            x0 * y1 + x1 * y0 - x2 * y3 - x3 * y2,
            x0 * y2 + x1 * y1 + x2 * y0 - x3 * y3,
            x0 * y3 + x1 * y2 + x2 * y1 + x3 * y0,
        ],
        axis=-1,
    )


def determinants_batch(xs: np.ndarray, skel: HexSkeleton = SKELETON) -> np.ndarray:
    """Determinants for an ``(N, 6)`` integer array of fillings.

    At the 8th root of unity the loop value vanishes, so only insertions
    producing a single skeleton loop contribute.
    """
    xs = np.asarray(xs, dtype=np.int64)
    if xs.ndim != 2 or xs.shape[1] != 6:
        raise ValueError("expected an (N, 6) array")
    lo, hi = int(xs.min(initial=0)), int(xs.max(initial=0))
    if max(abs(lo), abs(hi)) > 40:
        raise ValueError("batch determinants are limited to |x_i| <= 40")
    T = _cyclo_twist_table(lo, hi)
    loops = skeleton_loops(skel)
    acc = np.zeros((len(xs), 4), dtype=np.int64)
    for s in range(64):
        if loops[s] != 1:
            continue
        prod = T[xs[:, 0] - lo, s & 1]
        for i in range(1, 6):
            prod = _cyclo_mul_batch(prod, T[xs[:, i] - lo, (s >> i) & 1])
        acc += prod
    # |v|^2 = v * conj(v), conj(A) = -A^3
    conj = np.stack([acc[:, 0], -acc[:, 3], -acc[:, 2], -acc[:, 1]], axis=-1)
    norm = _cyclo_mul_batch(acc, conj)
    if np.any(norm[:, 1:] != 0):
        raise ArithmeticError("irrational determinant norm in batch")
    n0 = norm[:, 0]
    r = np.rint(np.sqrt(n0.astype(np.float64))).astype(np.int64)
    for _ in range(2):
        r = np.where(r * r > n0, r - 1, r)
        r = np.where((r + 1) * (r + 1) <= n0, r + 1, r)
    if np.any(r * r != n0):
        raise ArithmeticError("determinant norm is not a perfect square")
    return r


def component_counts_batch(xs: np.ndarray, skel: HexSkeleton = SKELETON) -> np.ndarray:
    xs = np.asarray(xs, dtype=np.int64)
    idx = ((xs & 1) << np.arange(6)).sum(axis=1)
    return np.array(parity_components(skel), dtype=np.int64)[idx]


# -- vectorised brackets and Jones polynomials -----------------------------

BATCH_BRACKET_MAX_ABS = 4  # keeps every coefficient well inside int64


@lru_cache(maxsize=8)
def _half_tables(bound: int, skel: HexSkeleton):
    """Dense partial brackets for the first and last three boxes.

    ``first[t, s]`` is the product of the chosen twist coefficients of boxes 0-2
    for triple index ``t`` and insertion bits ``s``; ``second[t, s]`` already sums
    boxes 3-5 against the loop factor for first-half bits ``s``.
    """
    import itertools

    vals = range(-bound, bound + 1)
    triples = list(itertools.product(vals, repeat=3))
    loops = skeleton_loops(skel)
    first, second = [], []
    for tr in triples:
        tw = [twist_bracket(n) for n in tr]
        sub = []
        for s in range(8):
            p = ONE
            for i in range(3):
                p = p * (tw[i].cinf if s >> i & 1 else tw[i].c0)
            sub.append(p)
        first.append(sub)
        second.append(
            [sum((sub[s2] * DELTA ** (loops[s1 | s2 << 3] - 1) for s2 in range(8)), ZERO) for s1 in range(8)]
        )

    def densify(rows):
        polys = [p for r in rows for p in r if p]
        lo = min(p.min_degree() for p in polys)
        hi = max(p.max_degree() for p in polys)
        arr = np.zeros((len(rows), 8, hi - lo + 1), dtype=np.int64)
        for i, r in enumerate(rows):
            for s, p in enumerate(r):
                for e, v in p.terms():
                    arr[i, s, e - lo] = v
        return lo, arr

    return densify(first), densify(second)


def _triple_index(xs: np.ndarray, bound: int) -> tuple[np.ndarray, np.ndarray]:
    base = 2 * bound + 1
    sh = xs + bound
    i1 = (sh[:, 0] * base + sh[:, 1]) * base + sh[:, 2]
    i2 = (sh[:, 3] * base + sh[:, 4]) * base + sh[:, 5]
    return i1, i2


def brackets_batch(xs: np.ndarray, skel: HexSkeleton = SKELETON, chunk: int = 4096) -> tuple[int, np.ndarray]:
    """Brackets of an ``(N, 6)`` array of fillings as ``(lowest exponent, (N, W) coefficients)``."""
    xs = np.asarray(xs, dtype=np.int64)
    if xs.ndim != 2 or xs.shape[1] != 6:
        raise ValueError("expected an (N, 6) array")
    bound = int(np.abs(xs).max(initial=0))
    if bound > BATCH_BRACKET_MAX_ABS:
        raise ValueError(f"batch brackets are limited to |x_i| <= {BATCH_BRACKET_MAX_ABS}")
    (lo1, P1), (lo2, P2) = _half_tables(bound, skel)
    w1, w2 = P1.shape[2], P2.shape[2]
    out = np.zeros((len(xs), w1 + w2 - 1), dtype=np.int64)
    i1, i2 = _triple_index(xs, bound)
    for start in range(0, len(xs), chunk):
        sl = slice(start, start + chunk)
        a, b = P1[i1[sl]], P2[i2[sl]]
        acc = out[sl]
        for j in range(w1):
            col = a[:, :, j : j + 1]
            if col.any():
                acc[:, j : j + w2] += (col * b).sum(axis=1)
    return lo1 + lo2, out


@lru_cache(maxsize=None)
def writhe_coefficients(skel: HexSkeleton = SKELETON) -> np.ndarray:
    """``(64, 6)`` table: for a knot of parity pattern ``p`` the writhe is ``sum_i W[p, i] * x_i``.

    All crossings of one twist region share a sign once the orientation is
    fixed, and the orientation only depends on the parities.  Rows of link
    patterns are zero.
    """
    comps = parity_components(skel)
    W = np.zeros((64, 6), dtype=np.int64)
    for p in range(64):
        if comps[p] != 1:
            continue
        base = [(p >> i) & 1 for i in range(6)]
        w0 = hex_writhe(base, skel)
        for i in range(6):
            bumped = list(base)
            bumped[i] += 2
            W[p, i] = (hex_writhe(bumped, skel) - w0) // 2
    return W


def writhes_batch(xs: np.ndarray, skel: HexSkeleton = SKELETON) -> np.ndarray:
    xs = np.asarray(xs, dtype=np.int64)
    idx = ((xs & 1) << np.arange(6)).sum(axis=1)
    return (writhe_coefficients(skel)[idx] * xs).sum(axis=1)


def jones_batch(xs: np.ndarray, skel: HexSkeleton = SKELETON) -> tuple[int, np.ndarray]:
    """Jones polynomials of an array of knot fillings, aligned as in :func:`brackets_batch`."""
    xs = np.asarray(xs, dtype=np.int64)
    if np.any(component_counts_batch(xs, skel) != 1):
        raise ValueError("jones_batch needs single-component fillings")
    lo, br = brackets_batch(xs, skel)
    w = writhes_batch(xs, skel)
    shift = -3 * w
    smin, smax = int(shift.min(initial=0)), int(shift.max(initial=0))
    out = np.zeros((len(xs), br.shape[1] + smax - smin), dtype=np.int64)
    sign = np.where(w % 2 == 1, -1, 1)[:, None]
    rows = np.arange(len(xs))[:, None]
    cols = (shift - smin)[:, None] + np.arange(br.shape[1])[None, :]
    out[rows, cols] = sign * br
    return lo + smin, out


def dense_to_poly(lo: int, row) -> LaurentPoly:
    return LaurentPoly((lo + i, int(v)) for i, v in enumerate(row) if v)


__all__ = [
    "brackets_batch",
    "jones_batch",
    "writhes_batch",
    "dense_to_poly",
    "LinkDiagram",
    "HexSkeleton",
    "SKELETON",
    "BracketVector",
    "fill",
    "twist_tangle_diagram",
    "component_count",
    "twist_bracket",
    "skeleton_loops",
    "multilinear_bracket",
    "state_sum_bracket",
    "diagram_bracket",
    "bracket",
    "jones",
    "diagram_jones",
    "normalize_jones",
    "hex_writhe",
    "determinant",
    "bracket_determinant",
    "diagram_determinant",
    "determinants_batch",
    "filling_component_count",
    "component_counts_batch",
    "parity_components",
]
