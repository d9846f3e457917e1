"""P(G, x, y) for arbitrary simple graphs by three-way edge elimination.

    P(G) = P(G - e) - P(G / e) + (x - y) * P(G with e and its endpoints removed)

An edgeless graph on ``n`` vertices gives ``x**n`` and a disconnected graph
gives the product over its components. The recursion always picks the
smallest edge unless a chooser is supplied.

A budget (and its cache) is meant for one thread at a time; distinct budgets
share nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .bipoly import BiPolynomial, EvalPoint, X, Y
from .errors import BudgetExhausted
from .graphs import Edge, Graph

EdgeChooser = Callable[[Graph], Edge]


def smallest_edge(g: Graph) -> Edge:
    return g.edges[0]


@dataclass
class EliminationBudget:
    max_recursion_nodes: int = 10**6
    cache: dict = field(default_factory=dict)
    nodes: int = 0

    def __post_init__(self) -> None:
        if self.max_recursion_nodes <= 0:
            raise ValueError("max_recursion_nodes must be positive")

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_recursion_nodes:
            raise BudgetExhausted(
                f"elimination exceeded {self.max_recursion_nodes} recursion nodes"
            )


def bivariate_poly(
    g: Graph,
    budget: EliminationBudget | None = None,
    choose_edge: EdgeChooser = smallest_edge,
) -> BiPolynomial:
    budget = budget if budget is not None else EliminationBudget()
    return _poly(g, budget, choose_edge)


def _poly(g: Graph, budget: EliminationBudget, choose: EdgeChooser) -> BiPolynomial:
    key = ("poly", g.canonical_key())
    hit = budget.cache.get(key)
    if hit is not None:
        return hit
    budget.tick()
    if not g.edges:
        result = X**g.n
    else:
        comps = g.connected_components()
        if len(comps) > 1:
            result = BiPolynomial.one()
            for c in comps:
                result = result * _poly(c, budget, choose)
        else:
            e = choose(g)
            result = (
                _poly(g.delete_edge(e), budget, choose)
                - _poly(g.contract_edge(e), budget, choose)
                + (X - Y) * _poly(g.extract_edge(e), budget, choose)
            )
    budget.cache[key] = result
    return result


def bivariate_value(
    g: Graph,
    at: EvalPoint | tuple[int, int],
    budget: EliminationBudget | None = None,
    choose_edge: EdgeChooser = smallest_edge,
) -> int:
    """Value of P(G) at one point, recursing on integers instead of polynomials."""
    at = EvalPoint.coerce(at)
    budget = budget if budget is not None else EliminationBudget()
    return _value(g, at.x, at.y, budget, choose_edge)


def _value(g: Graph, x: int, y: int, budget: EliminationBudget, choose: EdgeChooser) -> int:
    key = ("value", x, y, g.canonical_key())
    hit = budget.cache.get(key)
    if hit is not None:
        return hit
    budget.tick()
    if not g.edges:
        result = x**g.n
    else:
        comps = g.connected_components()
        if len(comps) > 1:
            result = 1
            for c in comps:
                result *= _value(c, x, y, budget, choose)
        else:
            e = choose(g)
            result = (
                _value(g.delete_edge(e), x, y, budget, choose)
                - _value(g.contract_edge(e), x, y, budget, choose)
                + (x - y) * _value(g.extract_edge(e), x, y, budget, choose)
            )
    budget.cache[key] = result
    return result
