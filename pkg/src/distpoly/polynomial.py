"""Exact univariate polynomials in the indeterminate ``k``.

``IntPoly`` holds arbitrary-precision integer coefficients in a dense tuple,
index = power of k, normalized so the zero polynomial is ``()``.  ``RatPoly``
is an ``IntPoly`` numerator over a positive integer denominator, which is all
the rational structure needed for dividing a counting polynomial by a group
order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import CountingError

Number = Union[int, "IntPoly"]


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = _normalize(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"IntPoly coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> IntPoly:
        if power < 0:
            raise ValueError("negative power")
        return cls((0,) * power + (coeff,))

    @classmethod
    def k(cls) -> IntPoly:
        return cls((0, 1))

    # -- structure -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return IntPoly(res)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return IntPoly(res)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, m: int) -> IntPoly:
        return IntPoly(m * c for c in self.coeffs)

    def __call__(self, x):
        """Horner evaluation; exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> IntPoly:
        return cls(int(c) for c in data["coeffs"])


def render(p: IntPoly) -> str:
    """Descending powers with explicit signs, e.g. ``k^4 - 2k^3 - k^2 + 2k``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for power in range(p.degree, -1, -1):
        c = p.coeffs[power]
        if c == 0:
            continue
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            var = "k" if power == 1 else f"k^{power}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def eval_poly(p: IntPoly, k: int) -> int:
    return p(k)


def falling_factorial(n: int) -> IntPoly:
    """k(k-1)...(k-n+1); the empty product 1 for n = 0."""
    if n < 0:
        raise ValueError("falling_factorial needs n >= 0")
    result = IntPoly((1,))
    for i in range(n):
        result = result * IntPoly((-i, 1))
    return result


def falling_value(k: int, n: int) -> int:
    """Numeric k_(n)."""
    result = 1
    for i in range(n):
        result *= k - i
    return result


def zero_multiplicity(p: IntPoly) -> int:
    """Multiplicity of k = 0 as a root: index of the lowest nonzero coefficient."""
    if p.is_zero():
        raise ValueError("zero polynomial has no finite root multiplicity")
    for i, c in enumerate(p.coeffs):
        if c:
            return i
    raise AssertionError("unreachable")


def interpolate(
    points: Sequence[tuple[int, int]], degree: int, integral: bool = True
) -> IntPoly | RatPoly:
    """Unique polynomial of degree <= ``degree`` through ``points``.

    Newton divided differences over ``Fraction``.  With ``integral=True`` a
    non-integer coefficient raises ``CountingError``; otherwise a ``RatPoly``
    is returned when the coefficients are not all integers.
    """
    if len(points) != degree + 1:
        raise ValueError(f"need exactly {degree + 1} points, got {len(points)}")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")

    table = [Fraction(y) for _, y in points]
    newton = [table[0]]
    for level in range(1, len(xs)):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(len(table) - 1)
        ]
        newton.append(table[0])

    # expand c_0 + c_1 (k-x_0) + c_2 (k-x_0)(k-x_1) + ... from the top down
    coeffs: list[Fraction] = [newton[-1]]
    for j in range(len(newton) - 2, -1, -1):
        shifted = [Fraction(0)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= xs[j] * c
        shifted[0] += newton[j]
        coeffs = shifted

    if all(c.denominator == 1 for c in coeffs):
        return IntPoly(int(c) for c in coeffs)
    if integral:
        raise CountingError(f"interpolated polynomial has non-integer coefficients: {coeffs}")
    return RatPoly.from_fractions(coeffs)


class RatPoly:
    """``num / den`` with ``den >= 1`` and ``gcd(content(num), den) == 1``."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("RatPoly denominator is zero")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num.content(), den) if not num.is_zero() else den
        object.__setattr__(self, "num", IntPoly(c // g for c in num.coeffs))
        object.__setattr__(self, "den", den // g)

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def from_fractions(cls, coeffs: Sequence[Fraction]) -> RatPoly:
        den = math.lcm(*(Fraction(c).denominator for c in coeffs)) if coeffs else 1
        return cls(IntPoly(int(Fraction(c) * den) for c in coeffs), den)

    @property
    def degree(self) -> int:
        return self.num.degree

    def coefficients(self) -> list[Fraction]:
        return [Fraction(c, self.den) for c in self.num.coeffs]

    def is_integral(self) -> bool:
        return self.den == 1

    def __call__(self, x) -> Fraction:
        return Fraction(self.num(x), self.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            other = RatPoly(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RatPoly", self.num.coeffs, self.den))

    def __repr__(self) -> str:
        return f"RatPoly({self.num!r}, {self.den})"

    def __str__(self) -> str:
        if self.den == 1:
            return render(self.num)
        return f"({render(self.num)})/{self.den}"


def div_by_const(p: IntPoly, m: int) -> RatPoly:
    if m < 1:
        raise ValueError("divisor must be a positive integer")
    return RatPoly(p, m)
