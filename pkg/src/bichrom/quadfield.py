"""Exact arithmetic on ``a + b*sqrt(D)`` with rational ``a``, ``b``.

Arithmetic is formal in the symbol ``sqrt(D)``: even when ``D`` is a perfect
square the two components are kept apart, and only :func:`extract_integer`
substitutes the numeric root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DiscriminantMismatch, NotAnInteger, NotInvertible

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class Discriminant:
    D: int
    is_square: bool
    sqrt_if_square: int | None

    @classmethod
    def of(cls, D: int) -> "Discriminant":
        if D < 0:
            raise ValueError(f"discriminant must be nonnegative, got {D}")
        r = math.isqrt(D)
        if r * r == D:
            return cls(D, True, r)
        return cls(D, False, None)

    @classmethod
    def for_point(cls, x: int, y: int) -> "Discriminant":
        """Discriminant ``(x+1)^2 - 4y`` of ``r^2 - (x-1)r - (x-y)``."""
        return cls.of((x + 1) ** 2 - 4 * y)

    @property
    def is_degenerate(self) -> bool:
        return self.D == 0


@dataclass(frozen=True)
class QuadElem:
    a: Fraction
    b: Fraction
    d: Discriminant

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def rational(cls, a: Rational, d: Discriminant) -> "QuadElem":
        return cls(Fraction(a), Fraction(0), d)

    @classmethod
    def root(cls, d: Discriminant) -> "QuadElem":
        return cls(Fraction(0), Fraction(1), d)

    def _lift(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.d.D != self.d.D:
                raise DiscriminantMismatch(f"sqrt({self.d.D}) vs sqrt({other.d.D})")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadElem.rational(other, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        D = self.d.D
        return QuadElem(
            self.a * o.a + D * self.b * o.b,
            self.a * o.b + o.a * self.b,
            self.d,
        )

    __rmul__ = __mul__

    def conj(self) -> "QuadElem":
        return QuadElem(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d.D * self.b * self.b

    def inv(self) -> "QuadElem":
        nm = self.norm()
        if nm == 0:
            raise NotInvertible(f"{self} has zero norm")
        c = self.conj()
        return QuadElem(c.a / nm, c.b / nm, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __pow__(self, n: int) -> "QuadElem":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = QuadElem.rational(1, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d.D})"


def quad_add(u: QuadElem, v: QuadElem) -> QuadElem:
    return u + v


def quad_mul(u: QuadElem, v: QuadElem) -> QuadElem:
    return u * v


def quad_neg(u: QuadElem) -> QuadElem:
    return -u


def quad_conj(u: QuadElem) -> QuadElem:
    return u.conj()


def quad_inv(u: QuadElem) -> QuadElem:
    return u.inv()


def quad_pow(u: QuadElem, n: int) -> QuadElem:
    return u**n


def extract_integer(u: QuadElem) -> int:
    if u.d.is_square:
        value = u.a + u.b * u.d.sqrt_if_square
    elif u.b == 0:
        value = u.a
    else:
        raise NotAnInteger(f"{u} has a nonzero irrational part")
    if value.denominator != 1:
        raise NotAnInteger(f"{u} evaluates to {value}")
    return value.numerator
