"""Conjugacy normal forms in the 3-strand braid group.

Modulo the centre, generated by ``C = (s1 s2)^3``, the group is the free
product of ``x = s1 s2 s1`` (order 2) and ``y = s1 s2`` (order 3), with

    s1 = y^2 x,   s1^-1 = x y,   s2 = x y^2,   s2^-1 = y x.

A cyclically reduced word in the free product alternates ``x`` with ``y`` or
``y^2``; reading it as blocks ``x y -> s1^-1`` and ``x y^2 -> s2`` gives a word
in ``s1^-1, s2`` that is unique up to rotation.  The power of ``C`` is then
fixed by the exponent sum.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .words import BraidWord3

# letter -> sequence of (generator, exponent) in the free product
_IMAGE = {
    1: (("y", 2), ("x", 1)),
    -1: (("x", 1), ("y", 1)),
    2: (("x", 1), ("y", 2)),
    -2: (("y", 1), ("x", 1)),
}
_ORDER = {"x": 2, "y": 3}


def _push(stack: list[list], gen: str, e: int) -> None:
    if stack and stack[-1][0] == gen:
        e = (stack[-1][1] + e) % _ORDER[gen]
        if e:
            stack[-1][1] = e
        else:
            stack.pop()
    else:
        e %= _ORDER[gen]
        if e:
            stack.append([gen, e])


def quotient_image(w: BraidWord3) -> list[tuple[str, int]]:
    """Reduced image of ``w`` in the free product of orders 2 and 3."""
    stack: list[list] = []
    for a in w.letters:
        for g, e in _IMAGE[a]:
            _push(stack, g, e)
    return [tuple(s) for s in stack]


def cyclic_reduce(word: list[tuple[str, int]]) -> list[tuple[str, int]]:
    w = [list(s) for s in word]
    while len(w) >= 2 and w[0][0] == w[-1][0]:
        g, e = w.pop()
        e = (w[0][1] + e) % _ORDER[g]
        if e:
            w[0][1] = e
        else:
            w.pop(0)
    return [tuple(s) for s in w]


# lifts of the words that do not alternate
_SPECIAL_LIFTS = {
    (): (),
    (("y", 1),): (1, 2),
    (("y", 2),): (1, 2, 1, 2),
    (("x", 1),): (1, 2, 1),
}


@dataclass(frozen=True)
class SchreierForm:
    """``C^central_power`` times ``tail``; equal forms mean conjugate braids."""

    central_power: int
    tail: BraidWord3

    @property
    def syllables(self) -> tuple[tuple[int, int], ...]:
        """``(p, q)`` pairs reading the tail as ``s1^-p s2^q ...`` (only for alternating tails)."""
        return _syllables(self.tail.letters)

    def as_braid(self) -> BraidWord3:
        c = BraidWord3((1, 2) * 3)
        return (c * self.central_power) + self.tail

    def to_text(self) -> str:
        parts = []
        if self.central_power:
            parts.append("C" if self.central_power == 1 else f"C^{self.central_power}")
        if self.tail.letters or not parts:
            parts.append(self.tail.to_text())
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()


def _syllables(letters: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    out: list[list[int]] = []
    for a in letters:
        if a == -1:
            if not out or out[-1][1] > 0:
                out.append([0, 0])
            out[-1][0] += 1
        elif a == 2:
            if not out:
                out.append([0, 0])
            out[-1][1] += 1
        else:
            return ()
    return tuple(tuple(s) for s in out)


def _canonical_rotation(letters: list[int]) -> tuple[int, ...]:
    if not letters or all(a == letters[0] for a in letters):
        return tuple(letters)
    n = len(letters)
    # start every rotation at the beginning of an s1^-1 run
    starts = [i for i in range(n) if letters[i] == -1 and letters[i - 1] == 2]
    best = None
    for s in starts:
        rot = tuple(letters[s:] + letters[:s])
        key = _syllables(rot)
        if best is None or key < best[0]:
            best = (key, rot)
    return best[1]


def schreier_normal_form(w: BraidWord3) -> SchreierForm:
    img = cyclic_reduce(quotient_image(w))
    key = tuple(img)
    if key in _SPECIAL_LIFTS:
        tail = _SPECIAL_LIFTS[key]
    else:
        if img[0][0] != "x":
            img = img[1:] + img[:1]
        letters = []
        for i in range(0, len(img), 2):
            (gx, _), (gy, e) = img[i], img[i + 1]
            assert gx == "x" and gy == "y"
            letters.append(-1 if e == 1 else 2)
        tail = _canonical_rotation(letters)
    tail_word = BraidWord3(tail)
    diff = w.exponent_sum() - tail_word.exponent_sum()
    if diff % 6:
        raise ArithmeticError(f"exponent sums of {w} and its lift differ by {diff}")
    return SchreierForm(diff // 6, tail_word)


def are_conjugate(w1: BraidWord3, w2: BraidWord3) -> bool:
    return schreier_normal_form(w1) == schreier_normal_form(w2)


# --------------------------------------------------------------------------
# recognising closures


class ClosedBraidClass(enum.Enum):
    TRIVIAL_KNOT = "TrivialKnot"
    COMPOSITE_LINK = "CompositeLink"
    OTHER = "Other"


@lru_cache(maxsize=None)
def trivial_knot_forms() -> tuple[SchreierForm, ...]:
    words = ["s1 s2", "s1^-1 s2", "C^-1 s1 s2 s1 s2"]
    return tuple(schreier_normal_form(BraidWord3.parse(t)) for t in words)


def composite_pattern_1(u: int, v: int) -> BraidWord3:
    """``s1^-u s2^v``."""
    return BraidWord3.power(1, -u) + BraidWord3.power(2, v)


def composite_pattern_2(u: int, v: int) -> BraidWord3:
    """``C^-1 s1^-u s2 s1^-v s2``."""
    return BraidWord3.parse("C^-1") + BraidWord3.power(1, -u) + BraidWord3([2]) + BraidWord3.power(1, -v) + BraidWord3([2])


def _matches_composite(nf: SchreierForm) -> tuple[str, int, int] | None:
    p = sum(1 for a in nf.tail.letters if a == -1)
    q = sum(1 for a in nf.tail.letters if a == 2)
    if len(nf.tail.letters) != p + q:
        return None
    if nf.central_power == 0 and p >= q >= 2:
        if schreier_normal_form(composite_pattern_1(p, q)) == nf:
            return ("s1^-u s2^v", p, q)
    if nf.central_power == -1 and q == 2:
        for v in range(0, p // 2 + 1):
            u = p - v
            if schreier_normal_form(composite_pattern_2(u, v)) == nf:
                return ("C^-1 s1^-u s2 s1^-v s2", u, v)
    return None


def composite_witness(w: BraidWord3) -> tuple[str, int, int, bool] | None:
    """Matching composite pattern for ``w`` or its mirror (last field flags the mirror)."""
    for mirrored, word in ((False, w), (True, w.mirror())):
        m = _matches_composite(schreier_normal_form(word))
        if m:
            return (*m, mirrored)
    return None


def closed_braid_class(w: BraidWord3) -> ClosedBraidClass:
    if schreier_normal_form(w) in trivial_knot_forms():
        return ClosedBraidClass.TRIVIAL_KNOT
    if composite_witness(w) is not None:
        return ClosedBraidClass.COMPOSITE_LINK
    return ClosedBraidClass.OTHER
