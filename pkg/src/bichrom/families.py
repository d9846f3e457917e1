"""Path, cycle and star computations: sum formulas, recurrences, closed forms."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .bipoly import ONE, X, Y, BiPolynomial, EvalPoint, RatBiPolynomial
from .elimination import EliminationBudget, bivariate_poly, bivariate_value
from .errors import CycleTooSmall, DegeneratePoint, DomainError, MethodUnavailable, RouteMismatch
from .graphs import Graph, cycle, path, star
from .oracle import OracleBudget, count_colorings
from .quadfield import Discriminant, QuadElem, extract_integer

KINDS = ("path", "cycle", "star")

CYCLE3 = X**3 - 3 * X * Y + 2 * Y


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        if self.kind == "path" and self.n < 0:
            raise DomainError(f"path needs n >= 0, got {self.n}")
        if self.kind == "cycle" and self.n < 3:
            raise CycleTooSmall(f"cycle needs n >= 3, got {self.n}")
        if self.kind == "star" and self.n < 1:
            raise DomainError(f"star needs n >= 1, got {self.n}")

    def graph(self) -> Graph:
        return {"path": path, "cycle": cycle, "star": star}[self.kind](self.n)


def gen_binomial(m: int, k: int) -> int:
    """Binomial coefficient allowing a negative top: C(m, 0) = 1, C(m, k<0) = 0."""
    if k < 0:
        return 0
    num, den = 1, 1
    for t in range(k):
        num *= m - t
        den *= t + 1
    return num // den


def _sum_terms(n: int):
    """Yield ``(i, j, signed)`` for the double sum over ``0 < i + 2j <= n``."""
    for j in range(n // 2 + 1):
        for i in range(n - 2 * j + 1):
            if i + 2 * j == 0:
                continue
            c = gen_binomial(i + j, i) * gen_binomial(n - i - j - 1, n - i - 2 * j)
            if c:
                yield i, j, (-1) ** (n - i - j) * c


def path_sum_poly(n: int) -> BiPolynomial:
    if n < 1:
        raise DomainError("the path sum formula is defined for n >= 1")
    return BiPolynomial(((i, j), c) for i, j, c in _sum_terms(n))


def cycle_sum_poly(n: int) -> BiPolynomial:
    if n < 3:
        raise CycleTooSmall(f"cycle needs n >= 3, got {n}")
    inner = RatBiPolynomial(((i, j), Fraction(c, i + j)) for i, j, c in _sum_terms(n))
    total = RatBiPolynomial.monomial(0, 1, (-1) ** n) + n * inner
    return total.to_integer()


# Bottom-up caches. Entries are only ever appended, under the lock, so a
# reader either sees a finished entry or fills it itself.
_lock = threading.Lock()
_path_cache: list[BiPolynomial] = [ONE, X]
_cycle_cache: dict[int, BiPolynomial] = {3: CYCLE3}


def path_recurrence_poly(n: int) -> BiPolynomial:
    if n < 0:
        raise DomainError(f"path needs n >= 0, got {n}")
    if n < len(_path_cache):
        return _path_cache[n]
    with _lock:
        while len(_path_cache) <= n:
            p1, p2 = _path_cache[-1], _path_cache[-2]
            _path_cache.append((X - 1) * p1 + (X - Y) * p2)
        return _path_cache[n]


def cycle_recurrence_poly(n: int) -> BiPolynomial:
    if n < 3:
        raise CycleTooSmall(f"cycle needs n >= 3, got {n}")
    hit = _cycle_cache.get(n)
    if hit is not None:
        return hit
    paths = [path_recurrence_poly(k) for k in range(n + 1)]
    with _lock:
        top = max(_cycle_cache)
        prev = _cycle_cache[top]
        for k in range(top + 1, n + 1):
            prev = paths[k] + (X - Y) * paths[k - 2] - prev
            _cycle_cache[k] = prev
        return _cycle_cache[n]


def cycle_alternating_sum_poly(n: int) -> BiPolynomial:
    if n < 3:
        raise CycleTooSmall(f"cycle needs n >= 3, got {n}")
    acc = BiPolynomial.zero()
    for i in range(4, n + 1):
        term = path_recurrence_poly(i) + (X - Y) * path_recurrence_poly(i - 2)
        acc = acc + term if i % 2 == 0 else acc - term
    acc = acc - CYCLE3
    return acc if n % 2 == 0 else -acc


def star_poly(n: int, budget: EliminationBudget | None = None) -> BiPolynomial:
    return bivariate_poly(star(n), budget)


def characteristic_roots(at: EvalPoint | tuple[int, int]) -> tuple[QuadElem, QuadElem]:
    """Roots ``(x - 1 -+ sqrt(D)) / 2`` of ``r^2 - (x-1) r - (x-y) = 0``."""
    at = EvalPoint.coerce(at)
    d = Discriminant.for_point(at.x, at.y)
    half = Fraction(at.x - 1, 2)
    s = QuadElem(0, Fraction(1, 2), d)
    return half - s, half + s


def path_coefficients(at: EvalPoint | tuple[int, int]) -> tuple[QuadElem, QuadElem]:
    at = EvalPoint.coerce(at)
    d = Discriminant.for_point(at.x, at.y)
    if d.is_degenerate:
        raise DegeneratePoint("the path closed form is undefined at x = y = 1")
    root = QuadElem.root(d)
    denom = (2 * root).inv()
    return (root - (at.x + 1)) * denom, (root + (at.x + 1)) * denom


def path_closedform_quad(n: int, at: EvalPoint | tuple[int, int]) -> QuadElem:
    """``c1 r1^n + c2 r2^n`` before the numeric root is substituted."""
    if n < 0:
        raise DomainError(f"path needs n >= 0, got {n}")
    c1, c2 = path_coefficients(at)
    r1, r2 = characteristic_roots(at)
    return c1 * r1**n + c2 * r2**n


def path_closedform_eval(n: int, at: EvalPoint | tuple[int, int]) -> int:
    return extract_integer(path_closedform_quad(n, at))


def power_sum_quad(n: int, at: EvalPoint | tuple[int, int]) -> QuadElem:
    r1, r2 = characteristic_roots(at)
    return r1**n + r2**n


def power_sum_recurrence(n: int, at: EvalPoint | tuple[int, int]) -> int:
    """``r1^n + r2^n`` via ``p_k = (x-1) p_{k-1} + (x-y) p_{k-2}``, ``p_0 = 2``, ``p_1 = x-1``."""
    at = EvalPoint.coerce(at)
    a, b = at.x - 1, at.x - at.y
    p0, p1 = 2, a
    if n == 0:
        return p0
    for _ in range(n - 1):
        p0, p1 = p1, a * p1 + b * p0
    return p1


def cycle_closedform_eval(n: int, at: EvalPoint | tuple[int, int]) -> int:
    if n < 3:
        raise CycleTooSmall(f"cycle needs n >= 3, got {n}")
    at = EvalPoint.coerce(at)
    p = power_sum_recurrence(n, at)
    if not at.is_degenerate:
        q = extract_integer(power_sum_quad(n, at))
        if q != p:
            raise RouteMismatch(f"power sums disagree at n={n}, {at}: {q} != {p}")
    return p + (-1) ** n * (at.y - 1)


POLY_METHODS = ("sum", "rec", "alt", "elim")
VALUE_METHODS = POLY_METHODS + ("closed", "oracle")


def default_method(kind: str) -> str:
    return "elim" if kind == "star" else "rec"


def family_poly(
    spec: FamilySpec, method: str, budget: EliminationBudget | None = None
) -> BiPolynomial:
    kind, n = spec.kind, spec.n
    if method == "elim":
        return bivariate_poly(spec.graph(), budget)
    if kind == "path":
        if method == "sum":
            return path_sum_poly(n)
        if method == "rec":
            return path_recurrence_poly(n)
    elif kind == "cycle":
        if method == "sum":
            return cycle_sum_poly(n)
        if method == "rec":
            return cycle_recurrence_poly(n)
        if method == "alt":
            return cycle_alternating_sum_poly(n)
    raise MethodUnavailable(f"method {method!r} does not produce a {kind} polynomial")


def family_value(
    spec: FamilySpec,
    at: EvalPoint,
    method: str,
    budget: EliminationBudget | None = None,
    oracle_budget: OracleBudget | None = None,
) -> int:
    if method == "closed":
        if spec.kind == "path":
            return path_closedform_eval(spec.n, at)
        if spec.kind == "cycle":
            return cycle_closedform_eval(spec.n, at)
        raise MethodUnavailable("no closed form is available for stars")
    if method == "oracle":
        return count_colorings(spec.graph(), at, oracle_budget)
    if method == "elim":
        return bivariate_value(spec.graph(), at, budget)
    return family_poly(spec, method, budget).eval(at)
