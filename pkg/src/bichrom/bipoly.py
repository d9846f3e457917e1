"""Sparse exact polynomials in two indeterminates ``x`` and ``y``.

Terms are stored as ``{(i, j): c}`` meaning ``c * x**i * y**j``. Zero
coefficients are never stored, so two polynomials are equal exactly when
their term maps are equal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import IntegralityViolation, InvalidPoint

Monomial = tuple[int, int]


@dataclass(frozen=True)
class EvalPoint:
    """Color-count parameters: ``x`` colors in total, the lowest ``y`` of them proper."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if isinstance(self.x, bool) or isinstance(self.y, bool):
            raise InvalidPoint("x and y must be integers")
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise InvalidPoint("x and y must be integers")
        if not 0 <= self.y <= self.x:
            raise InvalidPoint(f"need 0 <= y <= x, got x={self.x}, y={self.y}")

    @classmethod
    def coerce(cls, at: "EvalPoint | tuple[int, int]") -> "EvalPoint":
        if isinstance(at, EvalPoint):
            return at
        x, y = at
        return cls(x, y)

    @property
    def is_degenerate(self) -> bool:
        return self.x == 1 and self.y == 1


def _sort_key(mono: Monomial) -> tuple[int, int]:
    i, j = mono
    return (-(i + j), -i)


class _BiPolyBase:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]] = ()):
        acc: dict[Monomial, object] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative degree in monomial {(i, j)}")
            c = self._coerce(c)
            acc[(i, j)] = acc.get((i, j), 0) + c
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash: int | None = None

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    # construction helpers
    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, i: int, j: int, c=1):
        return cls({(i, j): c})

    @classmethod
    def _wrap(cls, other):
        if isinstance(other, cls):
            return other
        if isinstance(other, _BiPolyBase):
            return cls(other._terms)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return cls.const(other)
        return NotImplemented

    @property
    def terms(self) -> dict[Monomial, object]:
        return dict(self._terms)

    def coefficient(self, i: int, j: int):
        return self._terms.get((i, j), 0)

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms, key=_sort_key)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """Largest ``i + j`` over stored terms; -1 for the zero polynomial."""
        return max((i + j for i, j in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return type(self)(acc)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[Monomial, object] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return type(self)(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = type(self).one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval(self, at: EvalPoint | tuple[int, int]):
        """Exact value at an integer point. Accepts any pair, not only ``y <= x``."""
        if isinstance(at, EvalPoint):
            x, y = at.x, at.y
        else:
            x, y = at
        return sum((c * x**i * y**j for (i, j), c in self._terms.items()), 0)

    def substitute_diagonal(self):
        """The polynomial ``p(x, x)``."""
        acc: dict[Monomial, object] = {}
        for (i, j), c in self._terms.items():
            acc[(i + j, 0)] = acc.get((i + j, 0), 0) + c
        return type(self)(acc)

    # rendering
    def _render(self, latex: bool) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for n, (i, j) in enumerate(self.monomials()):
            c = self._terms[(i, j)]
            neg = c < 0
            mag = -c if neg else c
            body = _power("x", i, latex) + _power("y", j, latex)
            if not body:
                coeff = _fmt_coeff(mag, latex)
            elif mag == 1:
                coeff = ""
            else:
                coeff = _fmt_coeff(mag, latex)
            term = coeff + body
            if n == 0:
                parts.append(("-" if neg else "") + term)
            else:
                parts.append((" - " if neg else " + ") + term)
        return "".join(parts)

    def to_text(self) -> str:
        return self._render(latex=False)

    def to_latex(self) -> str:
        return self._render(latex=True)

    def to_json_obj(self) -> list[dict]:
        return [
            {"i": i, "j": j, "c": str(self._terms[(i, j)])} for i, j in self.monomials()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: Union[str, list]):
        data = json.loads(text) if isinstance(text, str) else text
        if not isinstance(data, list):
            raise ValueError("expected a JSON list of monomials")
        terms = []
        for item in data:
            try:
                i, j, c = item["i"], item["j"], item["c"]
            except (KeyError, TypeError) as exc:
                raise ValueError(f"malformed monomial {item!r}") from exc
            if not isinstance(i, int) or not isinstance(j, int):
                raise ValueError(f"malformed monomial {item!r}")
            terms.append(((i, j), cls._parse_coeff(c)))
        return cls(terms)

    @staticmethod
    def _parse_coeff(c):
        raise NotImplementedError

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_text()!r})"


def _power(var: str, k: int, latex: bool) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    if latex and k >= 10:
        return f"{var}^{{{k}}}"
    return f"{var}^{k}"


def _fmt_coeff(c, latex: bool) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        if latex:
            return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
        return f"({c.numerator}/{c.denominator})"
    return str(int(c))


class BiPolynomial(_BiPolyBase):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise IntegralityViolation(f"non-integer coefficient {c}")
            return c.numerator
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError(f"integer coefficient required, got {c!r}")
        return c

    @staticmethod
    def _parse_coeff(c):
        if not isinstance(c, str):
            raise ValueError("coefficients must be decimal strings")
        return int(c)

    @classmethod
    def _wrap(cls, other):
        # mixed arithmetic is handled by RatBiPolynomial's reflected operators
        if isinstance(other, RatBiPolynomial):
            return NotImplemented
        return super()._wrap(other)


class RatBiPolynomial(_BiPolyBase):
    """Polynomial with rational coefficients, used for intermediates only."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, bool):
            raise TypeError("bool is not a coefficient")
        return Fraction(c)

    @staticmethod
    def _parse_coeff(c):
        return Fraction(c)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def to_integer(self) -> BiPolynomial:
        bad = [(k, c) for k, c in self._terms.items() if c.denominator != 1]
        if bad:
            (i, j), c = bad[0]
            raise IntegralityViolation(f"coefficient {c} of x^{i}y^{j} is not an integer")
        return BiPolynomial({k: c.numerator for k, c in self._terms.items()})


X = BiPolynomial.x()
Y = BiPolynomial.y()
ONE = BiPolynomial.one()
ZERO = BiPolynomial.zero()


def add(p: BiPolynomial, q: BiPolynomial) -> BiPolynomial:
    return p + q


def mul(p: BiPolynomial, q: BiPolynomial) -> BiPolynomial:
    return p * q


def evaluate(p: BiPolynomial, at: EvalPoint | tuple[int, int]) -> int:
    return p.eval(at)


def substitute_diagonal(p: BiPolynomial) -> BiPolynomial:
    return p.substitute_diagonal()


def to_text(p: BiPolynomial) -> str:
    return p.to_text()


def to_latex(p: BiPolynomial) -> str:
    return p.to_latex()


def to_json(p: BiPolynomial) -> str:
    return p.to_json()


def parse_json(text: str) -> BiPolynomial:
    return BiPolynomial.from_json(text)
