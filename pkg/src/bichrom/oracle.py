"""Brute-force coloring counter, used as ground truth.

Colors are ``1..x``; an edge ``{u, v}`` is satisfied when ``f(u) != f(v)`` or
the shared color exceeds ``y``. Vertices are assigned in label order and a
partial assignment is dropped as soon as an edge back to an earlier vertex
fails.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipoly import EvalPoint
from .errors import BudgetExhausted
from .graphs import Graph


@dataclass(frozen=True)
class OracleBudget:
    max_colorings: int = 10**8


def _check_budget(g: Graph, x: int, budget: OracleBudget | None) -> None:
    budget = budget or OracleBudget()
    if x**g.n > budget.max_colorings:
        raise BudgetExhausted(
            f"{x}^{g.n} colorings exceed the oracle budget of {budget.max_colorings}"
        )


def _earlier_neighbors(g: Graph) -> list[list[int]]:
    back: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        back[v].append(u)
    return back


def _count_from(back: list[list[int]], colors: list[int], start: int, x: int, y: int) -> int:
    n = len(back)
    if start == n:
        return 1
    total = 0
    for c in range(1, x + 1):
        ok = True
        if c <= y:
            for w in back[start]:
                if colors[w] == c:
                    ok = False
                    break
        if ok:
            colors[start] = c
            total += _count_from(back, colors, start + 1, x, y)
    colors[start] = 0
    return total


def count_colorings(
    g: Graph, at: EvalPoint | tuple[int, int], budget: OracleBudget | None = None
) -> int:
    at = EvalPoint.coerce(at)
    _check_budget(g, at.x, budget)
    return _count_from(_earlier_neighbors(g), [0] * g.n, 0, at.x, at.y)


def count_colorings_partitioned(
    g: Graph, at: EvalPoint | tuple[int, int], budget: OracleBudget | None = None
) -> int:
    """Same count, summed over the possible colors of vertex 0.

    Each part is independent of the others, so the parts may be computed in
    any order or in parallel and combined by integer addition.
    """
    at = EvalPoint.coerce(at)
    _check_budget(g, at.x, budget)
    if g.n == 0:
        return 1
    back = _earlier_neighbors(g)
    parts = [count_with_first_color(back, c, at) for c in range(1, at.x + 1)]
    return sum(parts)


def count_with_first_color(back: list[list[int]], c: int, at: EvalPoint) -> int:
    colors = [0] * len(back)
    colors[0] = c
    return _count_from(back, colors, 1, at.x, at.y)
