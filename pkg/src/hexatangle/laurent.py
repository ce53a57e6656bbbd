"""Integer Laurent polynomials in one variable ``A``.

Also hosts the small amount of arithmetic needed in ``Z[A]/(A^4 + 1)``, the
ring in which the Kauffman bracket is evaluated at a primitive 8th root of
unity to read off knot determinants without floating point.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Finitely supported map ``exponent -> coefficient`` with integer values.

    Instances are immutable and hashable; zero coefficients are never stored.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            v = c.get(e, 0) + v
            if v:
                c[e] = v
            else:
                c.pop(e, None)
        self._c = c
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, value: int) -> LaurentPoly:
        return cls({0: value})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def terms(self):
        """Yield ``(exponent, coefficient)`` pairs in increasing exponent order."""
        for e in sorted(self._c):
            yield e, self._c[e]

    def __getitem__(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def min_degree(self) -> int:
        return min(self._c)

    def max_degree(self) -> int:
        return max(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __add__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return _raw(c)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: v * other for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return _raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, v), = self._c.items()
            if v not in (1, -1):
                raise ValueError("monomial is not a unit")
            return LaurentPoly({e * n: v ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``A**k``."""
        return _raw({e + k: v for e, v in self._c.items()})

    def invert_variable(self) -> LaurentPoly:
        """Substitute ``A -> A^-1`` (the mirror-image operation on brackets)."""
        return _raw({-e: v for e, v in self._c.items()})

    def eval_int(self, a: int) -> int:
        """Evaluate at an integer; only defined when no negative exponents occur or |a| == 1."""
        if a in (1, -1):
            return sum(v * (a ** (e % 2)) for e, v in self._c.items())
        if self._c and min(self._c) < 0:
            raise ValueError("negative exponents at a non-unit point")
        return sum(v * a ** e for e, v in self._c.items())

    def mod_cyclotomic8(self) -> tuple[int, int, int, int]:
        """Image in ``Z[A]/(A^4+1)`` as coefficients of ``1, A, A^2, A^3``."""
        return reduce_cyclotomic8(self._c.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({self.__str__()})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            if e == 0:
                mono = str(abs(v))
            else:
                mono = "A" if e == 1 else f"A^{e}"
                if abs(v) != 1:
                    mono = f"{abs(v)}*{mono}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    def to_json(self) -> list[list[int]]:
        return [[e, v] for e, v in self.terms()]

    @classmethod
    def from_json(cls, data) -> LaurentPoly:
        return cls((int(e), int(v)) for e, v in data)


def _raw(c: dict[int, int]) -> LaurentPoly:
    p = LaurentPoly.__new__(LaurentPoly)
    p._c = c
    p._hash = None
    return p


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
A = LaurentPoly.monomial(1)
#: loop value of the Kauffman bracket, -A^2 - A^-2
DELTA = LaurentPoly({2: -1, -2: -1})


# --- Z[A]/(A^4 + 1) -------------------------------------------------------

Cyclo8 = tuple[int, int, int, int]


def reduce_cyclotomic8(terms: Iterable[tuple[int, int]]) -> Cyclo8:
    out = [0, 0, 0, 0]
    for e, v in terms:
        q, r = divmod(e, 4)
        # A^4 = -1
        out[r] += -v if q % 2 else v
    return tuple(out)


def cyclo8_mul(x: Cyclo8, y: Cyclo8) -> Cyclo8:
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    return (
        x0 * y0 - x1 * y3 - x2 * y2 - x3 * y1,
        x0 * y1 + x1 * y0 - x2 * y3 - x3 * y2,
        x0 * y2 + x1 * y1 + x2 * y0 - x3 * y3,
        x0 * y3 + x1 * y2 + x2 * y1 + x3 * y0,
    )


def cyclo8_abs(x: Cyclo8) -> int:
    """Exact complex absolute value of ``x`` at ``A = exp(i*pi/4)``.

    ``|x|^2`` lies in ``Z[sqrt 2]``; bracket values at this root always land
    in ``Z`` with a perfect-square norm. Anything else raises.
    """
    x0, x1, x2, x3 = x
    # conj(A) = A^-1 = -A^3, so conj(x) = x0 - x3*A - x2*A^2 - x1*A^3
    n = cyclo8_mul(x, (x0, -x3, -x2, -x1))
    # n is real: n0 + n1*(A - A^3) with A - A^3 = sqrt 2, and n2 == 0
    n0, n1, n2, n3 = n
    if n2 != 0 or n1 != -n3:
        raise ArithmeticError(f"norm of {x} is not real: {n}")
    if n1 != 0:
        raise ArithmeticError(f"|{x}|^2 = {n0} + {n1}*sqrt(2) is irrational")
    from math import isqrt

    r = isqrt(n0)
    if r * r != n0:
        raise ArithmeticError(f"|{x}|^2 = {n0} is not a perfect square")
    return r
