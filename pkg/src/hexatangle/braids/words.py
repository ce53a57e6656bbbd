"""Words in the 3-strand braid group and their closures.

Letters are encoded as ``1, -1, 2, -2`` for ``s1, s1^-1, s2, s2^-1``.  The
compact text form accepts ``s1``, ``s2``, ``D`` (= ``s2 s1 s2``) and ``C``
(= ``(s1 s2)^3``), each optionally raised to an integer power: for example
``"s1^4 s2^-2 D^-2"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from ..diagrams import LinkDiagram, _Wiring

_LETTERS = (1, -1, 2, -2)
_NAMED = {"s1": (1,), "s2": (2,), "D": (2, 1, 2), "C": (1, 2) * 3}
_TOKEN = re.compile(r"^(s1|s2|D|C)(?:\^\{?([-+]?\d+)\}?)?$")


@dataclass(frozen=True)
class BraidWord3:
    letters: tuple[int, ...] = ()

    def __init__(self, letters: Iterable[int] = ()):
        t = tuple(int(a) for a in letters)
        for a in t:
            if a not in _LETTERS:
                raise ValueError(f"bad braid letter {a}")
        object.__setattr__(self, "letters", t)

    @classmethod
    def power(cls, gen: int, k: int) -> BraidWord3:
        return cls([gen if k > 0 else -gen] * abs(k))

    def __add__(self, other: BraidWord3) -> BraidWord3:
        return BraidWord3(self.letters + other.letters)

    def __mul__(self, k: int) -> BraidWord3:
        if k < 0:
            return self.inverse() * (-k)
        return BraidWord3(self.letters * k)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> BraidWord3:
        return BraidWord3(-a for a in reversed(self.letters))

    def mirror(self) -> BraidWord3:
        """Every crossing switched."""
        return BraidWord3(-a for a in self.letters)

    def free_reduce(self) -> BraidWord3:
        out: list[int] = []
        for a in self.letters:
            if out and out[-1] == -a:
                out.pop()
            else:
                out.append(a)
        return BraidWord3(out)

    def exponent_sum(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters)

    def permutation(self) -> tuple[int, int, int]:
        """Where each bottom position ends up at the top."""
        pos = [0, 1, 2]
        for a in self.letters:
            i = abs(a) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        # pos[j] = which original strand sits at position j
        out = [0, 0, 0]
        for j, s in enumerate(pos):
            out[s] = j
        return tuple(out)

    def closure_components(self) -> int:
        perm = self.permutation()
        seen, n = set(), 0
        for i in range(3):
            if i in seen:
                continue
            n += 1
            j = i
            while j not in seen:
                seen.add(j)
                j = perm[j]
        return n

    # -- text ----------------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> BraidWord3:
        letters: list[int] = []
        for tok in text.replace("*", " ").split():
            if tok in ("1", "e"):
                continue
            m = _TOKEN.match(tok)
            if not m:
                raise ValueError(f"cannot parse braid token {tok!r}")
            base = _NAMED[m.group(1)]
            k = int(m.group(2)) if m.group(2) is not None else 1
            unit = BraidWord3(base)
            letters.extend((unit * k).letters)
        return cls(letters)

    def to_text(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        runs: list[list[int]] = []
        for a in self.letters:
            if runs and runs[-1][0] == a:
                runs[-1][1] += 1
            else:
                runs.append([a, 1])
        for a, n in runs:
            k = n if a > 0 else -n
            parts.append(f"s{abs(a)}" + ("" if k == 1 else f"^{k}"))
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()


def q5_word(alpha: int, beta: int, gamma: int) -> BraidWord3:
    """``s1^-alpha s2 s1^-beta s2 s1^-gamma s2``."""
    w = BraidWord3()
    for a in (alpha, beta, gamma):
        w = w + BraidWord3.power(1, -a) + BraidWord3([2])
    return w


#: letter sign convention for closures: ``s_i`` is drawn as a negative
#: (left-handed) crossing; fixed by matching closures of the three-parameter
#: family against the filled hexatangle at the level of Jones polynomials
SIGMA_IS_POSITIVE_CROSSING = False


def braid_closure_diagram(w: BraidWord3, positive: bool | None = None) -> LinkDiagram:
    """Closure of ``w`` with strands running upward.

    Corner points of a crossing are SW/SE (bottom) and NW/NE (top).
    """
    if positive is None:
        positive = SIGMA_IS_POSITIVE_CROSSING
    wire = _Wiring()
    bottom = [("bot", j) for j in range(3)]
    cur = list(bottom)
    for k, a in enumerate(w.letters):
        i = abs(a) - 1
        P = {c: ("x", k, c) for c in ("SW", "SE", "NW", "NE")}
        wire.wire(cur[i], P["SW"])
        wire.wire(cur[i + 1], P["SE"])
        as_positive = (a > 0) == positive
        if as_positive:
            # over strand runs SW -> NE
            wire.crossing([P["SE"], P["NE"], P["NW"], P["SW"]])
        else:
            wire.crossing([P["SW"], P["SE"], P["NE"], P["NW"]])
        cur[i], cur[i + 1] = P["NW"], P["NE"]
    for j in range(3):
        wire.wire(cur[j], bottom[j])
    return wire.build()
