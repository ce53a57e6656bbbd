"""Exact rational-tangle arithmetic: fractions with a point at infinity,
continued fractions, 2-bridge knot comparison and Montesinos reductions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .laurent import DELTA, LaurentPoly  # re-exported for convenience

__all__ = [
    "Fraction",
    "INFINITY",
    "ContinuedFraction",
    "cf_eval",
    "cf_expand",
    "NotAKnotError",
    "two_bridge_is_trivial",
    "two_bridge_equal",
    "MontesinosSpec",
    "Reduction",
    "montesinos_determinant",
    "montesinos_insert_integral",
    "LaurentPoly",
    "DELTA",
]


@dataclass(frozen=True, init=False)
class Fraction:
    """Reduced ``p/q`` with ``q >= 0``; ``1/0`` is the single infinite value."""

    p: int
    q: int

    def __init__(self, p: int, q: int = 1):
        p, q = int(p), int(q)
        if p == 0 and q == 0:
            raise ZeroDivisionError("0/0 is not a tangle slope")
        g = gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def is_integral(self) -> bool:
        return self.q == 1

    def __neg__(self) -> Fraction:
        return Fraction(-self.p, self.q)

    def reciprocal(self) -> Fraction:
        return Fraction(self.q, self.p)

    def __add__(self, other) -> Fraction:
        if isinstance(other, int):
            other = Fraction(other)
        if self.is_infinite or other.is_infinite:
            if self.is_infinite and other.is_infinite:
                raise ZeroDivisionError("inf + inf is undefined")
            return INFINITY
        return Fraction(self.p * other.q + other.p * self.q, self.q * other.q)

    __radd__ = __add__

    def __str__(self) -> str:
        return str(self.p) if self.q == 1 else f"{self.p}/{self.q}"

    def to_json(self) -> list[int]:
        return [self.p, self.q]

    @classmethod
    def parse(cls, text: str) -> Fraction:
        text = text.strip()
        if "/" in text:
            a, b = text.split("/", 1)
            return cls(int(a), int(b))
        return cls(int(text))


INFINITY = Fraction(1, 0)


@dataclass(frozen=True)
class ContinuedFraction:
    """Terms ``[a1, ..., an]`` read as ``an + 1/(a_{n-1} + 1/(... + 1/a1))``."""

    terms: tuple[int, ...]

    def __init__(self, terms: Iterable[int]):
        t = tuple(int(a) for a in terms)
        if not t:
            raise ValueError("continued fraction needs at least one term")
        object.__setattr__(self, "terms", t)


def cf_eval(cf: ContinuedFraction | Sequence[int]) -> Fraction:
    terms = cf.terms if isinstance(cf, ContinuedFraction) else tuple(cf)
    if not terms:
        raise ValueError("continued fraction needs at least one term")
    # projective pair (p, q); x -> a + 1/x is (p, q) -> (a*p + q, p)
    p, q = terms[0], 1
    for a in terms[1:]:
        p, q = a * p + q, p
    return Fraction(p, q)


def cf_expand(f: Fraction) -> ContinuedFraction:
    """One continued fraction evaluating to ``f`` (Euclid on ``p/q``)."""
    if f.is_infinite:
        return ContinuedFraction([0, 0])
    p, q = f.p, f.q
    out = []
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    # out is outermost-first; our convention lists the outermost term last
    return ContinuedFraction(reversed(out))


class NotAKnotError(ValueError):
    """The numerator closure has two components."""


def two_bridge_is_trivial(f: Fraction) -> bool:
    if f.p % 2 == 0:
        raise NotAKnotError(f"K({f}) is a two-component link")
    return abs(f.p) == 1


def two_bridge_equal(f1: Fraction, f2: Fraction) -> bool:
    """Unoriented, mirror-blind equivalence of 2-bridge links ``K(f1)`` and ``K(f2)``."""
    if (f1.p % 2) != (f2.p % 2):
        raise ValueError("cannot compare a knot with a two-component link")
    p = abs(f1.p)
    if p != abs(f2.p):
        return False
    if p <= 1:
        return True
    a, b = f1.q % p, f2.q % p
    inv = pow(a, -1, p)
    return b in {a, (-a) % p, inv, (-inv) % p}


@dataclass(frozen=True)
class MontesinosSpec:
    tangles: tuple[Fraction, ...]

    def __init__(self, tangles: Iterable[Fraction | int]):
        t = tuple(x if isinstance(x, Fraction) else Fraction(x) for x in tangles)
        if len(t) < 2:
            raise ValueError("a Montesinos spec needs at least two tangles")
        object.__setattr__(self, "tangles", t)


class Reduction(enum.Enum):
    COMPOSITE_CANDIDATE = "composite candidate"
    NOT_REDUCIBLE = "not reducible"


def montesinos_determinant(m: MontesinosSpec) -> int:
    # |q1...qn * sum(pi/qi)| without dividing
    total = 0
    for i, f in enumerate(m.tangles):
        term = f.p
        for j, g in enumerate(m.tangles):
            if j != i:
                term *= g.q
        total += term
    return abs(total)


def _bezout_dual(c: int, d: int) -> tuple[int, int]:
    """Return ``(c', d')`` with ``c*d' - d*c' == 1``."""
    # extended Euclid on (c, d): x*c + y*d == g
    old_r, r = c, d
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_x, x = x, old_x - k * x
        old_y, y = y, old_y - k * y
    if old_r < 0:
        old_x, old_y = -old_x, -old_y
    # c*old_x + d*old_y == 1  ->  d' = old_x, c' = -old_y
    return -old_y, old_x


def _numerator_of_sum(f: Fraction, g: Fraction) -> Fraction:
    """Slope ``p/q`` with ``N(R(f) + R(g)) = K(p/q)``."""
    a, b, c, d = f.p, f.q, g.p, g.q
    c1, d1 = _bezout_dual(c, d)
    return Fraction(a * d + b * c, a * d1 + b * c1)


def montesinos_insert_integral(m: MontesinosSpec) -> Fraction | Reduction:
    tangles = list(m.tangles)
    if any(t.is_infinite for t in tangles):
        return Reduction.COMPOSITE_CANDIDATE
    integral = [i for i, t in enumerate(tangles) if t.is_integral]
    if not integral:
        return Reduction.NOT_REDUCIBLE
    n = sum(tangles[i].p for i in integral)
    rest = [t for i, t in enumerate(tangles) if i not in integral]
    if not rest:
        return Fraction(n, 1)
    # integer twists slide along the horizontal sum into any neighbour
    rest[0] = rest[0] + n
    if len(rest) == 1:
        return rest[0]
    if len(rest) == 2:
        return _numerator_of_sum(rest[0], rest[1])
    return Reduction.NOT_REDUCIBLE
