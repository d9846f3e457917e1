"""Exact bivariate chromatic polynomials P(G, x, y).

P(G, x, y) counts maps f: V -> {1..x} such that every edge {u, v} has
f(u) != f(v) or f(u) = f(v) > y.
"""

from .bipoly import BiPolynomial, EvalPoint, RatBiPolynomial, X, Y
from .elimination import EliminationBudget, bivariate_poly, bivariate_value
from .families import (
    FamilySpec,
    cycle_alternating_sum_poly,
    cycle_closedform_eval,
    cycle_recurrence_poly,
    cycle_sum_poly,
    path_closedform_eval,
    path_recurrence_poly,
    path_sum_poly,
    star_poly,
)
from .graphs import Graph, cycle, parse_edge_list, path, star
from .oracle import OracleBudget, count_colorings, count_colorings_partitioned
from .quadfield import Discriminant, QuadElem, extract_integer

__all__ = [
    "BiPolynomial", "EvalPoint", "RatBiPolynomial", "X", "Y",
    "EliminationBudget", "bivariate_poly", "bivariate_value",
    "FamilySpec", "cycle_alternating_sum_poly", "cycle_closedform_eval",
    "cycle_recurrence_poly", "cycle_sum_poly", "path_closedform_eval",
    "path_recurrence_poly", "path_sum_poly", "star_poly",
    "Graph", "cycle", "parse_edge_list", "path", "star",
    "OracleBudget", "count_colorings", "count_colorings_partitioned",
    "Discriminant", "QuadElem", "extract_integer",
]
