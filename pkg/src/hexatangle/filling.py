"""Box names and the six-slot filling record shared by every module."""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Iterable, Iterator, Union

BOXES = ("alpha", "beta", "gamma", "delta", "epsilon", "eta")
GREEK = dict(zip(BOXES, "αβγδεη"))
LETTERS = dict(zip(BOXES, "ABCDEF"))
BOX_INDEX = {b: i for i, b in enumerate(BOXES)}

OPPOSITE = {
    "alpha": "epsilon",
    "epsilon": "alpha",
    "beta": "eta",
    "eta": "beta",
    "gamma": "delta",
    "delta": "gamma",
}


def adjacent(a: str, b: str) -> bool:
    return a != b and OPPOSITE[a] != b


class _Unfilled:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unfilled"

    def __reduce__(self):
        return (_Unfilled, ())


#: marker for a box left empty
Unfilled = _Unfilled()

Slot = Union[int, _Unfilled]


@dataclass(frozen=True)
class HexFilling:
    alpha: Slot
    beta: Slot
    gamma: Slot
    delta: Slot
    epsilon: Slot
    eta: Slot

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if v is not Unfilled and not isinstance(v, int):
                raise TypeError(f"{f.name} must be an integer or Unfilled, got {v!r}")
            if isinstance(v, bool):
                raise TypeError(f"{f.name} must not be a bool")

    @classmethod
    def of(cls, values: Iterable[Slot]) -> HexFilling:
        vals = tuple(values)
        if len(vals) != 6:
            raise ValueError("a filling has exactly six slots")
        return cls(*(v if v is Unfilled else int(v) for v in vals))

    @classmethod
    def from_dict(cls, d: dict[str, Slot]) -> HexFilling:
        return cls(**{b: d[b] for b in BOXES})

    def __iter__(self) -> Iterator[Slot]:
        return iter(self.as_tuple())

    def __getitem__(self, box: str | int) -> Slot:
        if isinstance(box, int):
            box = BOXES[box]
        return getattr(self, box)

    def as_tuple(self) -> tuple:
        return (self.alpha, self.beta, self.gamma, self.delta, self.epsilon, self.eta)

    def as_dict(self) -> dict[str, Slot]:
        return dict(zip(BOXES, self.as_tuple()))

    @property
    def is_integral(self) -> bool:
        return all(v is not Unfilled for v in self.as_tuple())

    def require_integral(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise ValueError(f"filling {self} has unfilled slots")
        return self.as_tuple()

    def negated(self) -> HexFilling:
        return HexFilling.of(v if v is Unfilled else -v for v in self.as_tuple())

    def __str__(self) -> str:
        return "H(" + ", ".join(str(v) for v in self.as_tuple()) + ")"


def as_filling(x) -> HexFilling:
    return x if isinstance(x, HexFilling) else HexFilling.of(x)
