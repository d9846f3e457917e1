import random

import pytest

from helpers import interpolate_from_counts, naive_count

from bichrom.bipoly import X, Y, EvalPoint
from bichrom.elimination import EliminationBudget, bivariate_poly, bivariate_value
from bichrom.errors import BudgetExhausted
from bichrom.families import cycle_recurrence_poly, path_recurrence_poly
from bichrom.graphs import Graph, cycle, path, random_graph, star
from bichrom.oracle import count_colorings

P4 = X**4 - 3 * X**2 * Y + 2 * X * Y + Y**2 - Y
S4 = X**4 - 3 * X**2 * Y + 3 * X * Y - Y
C3 = X**3 - 3 * X * Y + 2 * Y


def corpus(size=60, seed=11, max_n=6):
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(0, max_n), rng.random()) for _ in range(size)]


def test_examples():
    assert bivariate_poly(path(4)) == P4
    assert bivariate_poly(cycle(3)) == C3
    assert bivariate_poly(Graph(3)) == X**3
    assert bivariate_poly(Graph(0)) == 1
    assert bivariate_poly(Graph(1)) == X


def test_value_examples():
    assert bivariate_value(star(4), (2, 1)) == 9 == S4.eval((2, 1))
    assert naive_count(4, star(4).edges, 2, 1) == 9
    assert bivariate_value(cycle(3), (1, 1)) == 0
    for pt in [(0, 0), (3, 1), (5, 5)]:
        assert bivariate_value(Graph(0), pt) == 1


def test_oracle_equivalence():
    pts = [EvalPoint(x, y) for x in range(5) for y in range(x + 1)]
    for g in corpus():
        poly = bivariate_poly(g)
        for pt in pts:
            want = count_colorings(g, pt)
            assert poly.eval(pt) == want
            assert bivariate_value(g, pt) == want


def test_against_interpolated_polynomial():
    for g in corpus(size=15, seed=3, max_n=5):
        assert bivariate_poly(g) == interpolate_from_counts(g.n, g.edges)


def test_family_consistency():
    for n in range(0, 11):
        assert bivariate_poly(path(n)) == path_recurrence_poly(n)
    for n in range(3, 11):
        assert bivariate_poly(cycle(n)) == cycle_recurrence_poly(n)


def test_diagonal_gives_proper_colorings():
    for g in corpus(size=30, seed=5):
        d = bivariate_poly(g).substitute_diagonal()
        for x in range(5):
            assert d.eval((x, 0)) == count_colorings(g, (x, x))


def test_edge_choice_independence():
    def chooser(seed):
        rng = random.Random(seed)
        return lambda g: rng.choice(g.edges)

    for k, g in enumerate(corpus(size=40, seed=8)):
        assert bivariate_poly(g, choose_edge=chooser(k)) == bivariate_poly(g)
        assert bivariate_poly(g, choose_edge=lambda h: h.edges[-1]) == bivariate_poly(g)


def test_degree_bound():
    for g in corpus():
        assert bivariate_poly(g).total_degree() == g.n


def test_budget():
    with pytest.raises(BudgetExhausted) as exc:
        bivariate_poly(cycle(8), EliminationBudget(max_recursion_nodes=3))
    assert exc.value.code == "BUDGET_EXHAUSTED"
    with pytest.raises(BudgetExhausted):
        bivariate_value(cycle(8), (3, 1), EliminationBudget(max_recursion_nodes=3))
    with pytest.raises(ValueError):
        EliminationBudget(max_recursion_nodes=0)


def test_shared_budget_reuses_cache():
    budget = EliminationBudget()
    bivariate_poly(path(12), budget)
    used = budget.nodes
    bivariate_poly(path(12), budget)
    assert budget.nodes == used


def test_complete_graph_is_falling_factorial_on_diagonal():
    k5 = Graph(5, tuple((u, v) for u in range(5) for v in range(u + 1, 5)))
    assert bivariate_poly(k5).substitute_diagonal() == X * (X - 1) * (X - 2) * (X - 3) * (X - 4)
