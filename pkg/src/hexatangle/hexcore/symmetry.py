"""Tetrahedral relabelings of the six boxes, optionally composed with mirror."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ..filling import BOXES, HexFilling, Unfilled, as_filling

#: each box sits on an edge of a tetrahedron with vertices 0..3; opposite
#: boxes sit on disjoint edges
BOX_EDGE = {
    "alpha": (1, 2),
    "beta": (1, 3),
    "gamma": (2, 3),
    "delta": (0, 1),
    "eta": (0, 2),
    "epsilon": (0, 3),
}
EDGE_BOX = {e: b for b, e in BOX_EDGE.items()}


@dataclass(frozen=True)
class HexSymmetry:
    """``perm[i]`` is the index of the box that receives the value of box ``i``."""

    perm: tuple[int, ...]
    mirror: bool = False

    def __post_init__(self):
        if sorted(self.perm) != list(range(6)):
            raise ValueError(f"not a permutation of six boxes: {self.perm}")

    @property
    def box_map(self) -> dict[str, str]:
        return {BOXES[i]: BOXES[j] for i, j in enumerate(self.perm)}

    def compose(self, other: HexSymmetry) -> HexSymmetry:
        """``self`` after ``other``."""
        return HexSymmetry(tuple(self.perm[other.perm[i]] for i in range(6)), self.mirror != other.mirror)

    def inverse(self) -> HexSymmetry:
        inv = [0] * 6
        for i, j in enumerate(self.perm):
            inv[j] = i
        return HexSymmetry(tuple(inv), self.mirror)

    def to_json(self) -> dict:
        return {"map": self.box_map, "mirror": self.mirror}

    @classmethod
    def from_vertex_perm(cls, vperm, mirror: bool = False) -> HexSymmetry:
        perm = []
        for b in BOXES:
            u, v = BOX_EDGE[b]
            image = tuple(sorted((vperm[u], vperm[v])))
            perm.append(BOXES.index(EDGE_BOX[image]))
        return cls(tuple(perm), mirror)


IDENTITY = HexSymmetry(tuple(range(6)), False)
MIRROR = HexSymmetry(tuple(range(6)), True)


@lru_cache(maxsize=None)
def _group() -> tuple[HexSymmetry, ...]:
    rel = [HexSymmetry.from_vertex_perm(p) for p in itertools.permutations(range(4))]
    return tuple(rel + [HexSymmetry(s.perm, True) for s in rel])


def symmetry_group() -> tuple[HexSymmetry, ...]:
    """All 48 symmetries; the identity comes first."""
    return _group()


def apply(s: HexSymmetry, x) -> HexFilling:
    vals = as_filling(x).as_tuple()
    out = [None] * 6
    for i, v in enumerate(vals):
        if s.mirror and v is not Unfilled:
            v = -v
        out[s.perm[i]] = v
    return HexFilling.of(out)


def apply_tuple(s: HexSymmetry, vals) -> tuple[int, ...]:
    out = [0] * 6
    sign = -1 if s.mirror else 1
    for i, v in enumerate(vals):
        out[s.perm[i]] = sign * v
    return tuple(out)


def orbit(x) -> set[tuple[int, ...]]:
    vals = as_filling(x).require_integral()
    return {apply_tuple(s, vals) for s in symmetry_group()}


def orbit_representative(x) -> tuple[int, ...]:
    """Lexicographically least image, in (alpha, ..., eta) order."""
    return min(orbit(x))
