"""Surgery on the six-component link ``L`` and the filling dictionary.

``L`` consists of three closure strands ``s1, s2, s3`` of a trivial 3-braid, a
circle around strands 1-2, a circle around strands 2-3 and an axis circle
around all three.  Coefficients are listed in the order
``(c12, c23, axis, s1, s2, s3)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from ..filling import HexFilling, Unfilled, as_filling
from ..tanglecalc import INFINITY, Fraction
from .words import SIGMA_IS_POSITIVE_CROSSING, BraidWord3

COMPONENTS = ("c12", "c23", "axis", "s1", "s2", "s3")


@dataclass(frozen=True)
class SurgeryDescription:
    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Sequence[Fraction | int]):
        c = tuple(x if isinstance(x, Fraction) else Fraction(x) for x in coefficients)
        if len(c) != 6:
            raise ValueError("a surgery on L needs six coefficients")
        for i in range(3):
            if not c[i].is_infinite and abs(c[i].p) != 1:
                raise ValueError(f"coefficient of {COMPONENTS[i]} must be 1/n or 1/0, got {c[i]}")
        for i in range(3, 6):
            if not (c[i].is_infinite or c[i].is_integral):
                raise ValueError(f"coefficient of {COMPONENTS[i]} must be integral or 1/0, got {c[i]}")
        object.__setattr__(self, "coefficients", c)

    def twist(self, i: int) -> int:
        """``n`` for a coefficient ``1/n`` on a twisting circle; ``1/0`` is no twisting."""
        f = self.coefficients[i]
        return f.q * f.p  # 1/n with sign moved to the numerator

    def to_json(self) -> list[list[int]]:
        return [f.to_json() for f in self.coefficients]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data) -> SurgeryDescription:
        if isinstance(data, str):
            data = json.loads(data)
        return cls([Fraction(p, q) for p, q in data])

    def __str__(self) -> str:
        return "L(" + ", ".join(str(f) for f in self.coefficients) + ")"


@dataclass(frozen=True)
class LinkingModel:
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = self.matrix
        if len(m) != 6 or any(len(r) != 6 for r in m):
            raise ValueError("linking model must be 6x6")
        for i in range(6):
            for j in range(6):
                if m[i][j] != m[j][i]:
                    raise ValueError("linking matrix must be symmetric")

    @classmethod
    def standard(cls) -> LinkingModel:
        """Each circle links the strands it encircles once; nothing else links."""
        m = [[0] * 6 for _ in range(6)]
        encircled = {0: (3, 4), 1: (4, 5), 2: (3, 4, 5)}
        for c, strands in encircled.items():
            for s in strands:
                m[c][s] = m[s][c] = 1
        return cls(tuple(tuple(r) for r in m))


def filling_to_surgery(x) -> SurgeryDescription:
    """``H(a, b, g, d, e, h) -> L(1/d, 1/g, 1/h, -a, -b, -e)``; unfilled boxes give ``1/0``."""
    x = as_filling(x)

    def recip(v):
        return INFINITY if v is Unfilled else Fraction(1, v)

    def neg(v):
        return INFINITY if v is Unfilled else Fraction(-v)

    return SurgeryDescription(
        [recip(x.delta), recip(x.gamma), recip(x.eta), neg(x.alpha), neg(x.beta), neg(x.epsilon)]
    )


def surgery_to_filling(s: SurgeryDescription) -> HexFilling:
    """Inverse of :func:`filling_to_surgery` on integral fillings.

    ``1/0`` on a twisting circle reads back as the box value 0; on a strand it
    reads back as an unfilled box.
    """
    c = s.coefficients

    def from_recip(f: Fraction) -> int:
        return 0 if f.is_infinite else f.q * f.p

    def from_neg(f: Fraction):
        return Unfilled if f.is_infinite else -f.p

    return HexFilling(
        alpha=from_neg(c[3]),
        beta=from_neg(c[4]),
        gamma=from_recip(c[1]),
        delta=from_recip(c[0]),
        epsilon=from_neg(c[5]),
        eta=from_recip(c[2]),
    )


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def presentation_matrix(s: SurgeryDescription, lm: LinkingModel) -> list[list[int]]:
    """Row ``i``: ``p_i mu_i + q_i sum_j lk(i,j) mu_j`` for coefficient ``p_i/q_i``."""
    rows = []
    for i, f in enumerate(s.coefficients):
        rows.append([f.p if i == j else f.q * lm.matrix[i][j] for j in range(6)])
    return rows


def h1_order(s: SurgeryDescription, lm: LinkingModel | None = None) -> int:
    """Order of first homology of the surgered manifold; 0 means infinite."""
    return abs(bareiss_det(presentation_matrix(s, lm or LinkingModel.standard())))


# --------------------------------------------------------------------------
# small closed pure 3-braids


@dataclass(frozen=True)
class FramedBraid:
    word: BraidWord3
    framings: tuple[int, int, int]
    text: str = ""

    def to_json(self) -> dict:
        return {"braid": self.text or self.word.to_text(), "framings": list(self.framings)}


def small_braid_word(e1: int, f1: int, e: int) -> BraidWord3:
    """``s1^(2 e1) s2^(2 f1) D^(2 e)`` with ``D = s2 s1 s2``."""
    d = BraidWord3((2, 1, 2))
    return BraidWord3.power(1, 2 * e1) + BraidWord3.power(2, 2 * f1) + d * (2 * e)


def braid_from_surgery(s: SurgeryDescription) -> FramedBraid:
    """Do the three twisting surgeries; the strands keep their adjusted framings.

    A ``1/n`` surgery on a circle adds ``-n`` full twists to the strands it
    encircles, changing each framing by ``-n`` and each pairwise linking by
    ``-n``.
    """
    e1, f1, e = (s.twist(i) for i in range(3))
    m, n, p = (s.coefficients[i] for i in range(3, 6))
    for f in (m, n, p):
        if not f.is_integral:
            raise ValueError("strand coefficients must be integral")
    framings = (m.p - e1 - e, n.p - e1 - f1 - e, p.p - f1 - e)
    text = " ".join(f"{g}^{k}" for g, k in (("s1", 2 * e1), ("s2", 2 * f1), ("D", 2 * e)) if k) or "1"
    return FramedBraid(small_braid_word(e1, f1, e), framings, text)


def closure_linking_matrix(fb: FramedBraid) -> list[list[int]]:
    """Framings on the diagonal, pairwise linking numbers of the closed pure braid elsewhere."""
    if fb.word.permutation() != (0, 1, 2):
        raise ValueError("braid is not pure")
    lk = [[0] * 3 for _ in range(3)]
    for (i, j), sign in _crossing_pairs(fb.word):
        lk[i][j] += sign
        lk[j][i] += sign
    out = [[lk[i][j] // 2 for j in range(3)] for i in range(3)]
    for i in range(3):
        out[i][i] = fb.framings[i]
    return out


def _crossing_pairs(w: BraidWord3):
    """``((strand_a, strand_b), sign)`` per crossing, strands oriented upward.

    Signs follow the letter convention used for closure diagrams.
    """
    pos = [0, 1, 2]
    for a in w.letters:
        i = abs(a) - 1
        sign = 1 if (a > 0) == SIGMA_IS_POSITIVE_CROSSING else -1
        yield (pos[i], pos[i + 1]), sign
        pos[i], pos[i + 1] = pos[i + 1], pos[i]


def framed_braid_h1(fb: FramedBraid) -> int:
    return abs(bareiss_det(closure_linking_matrix(fb)))
