"""Differential checks: every computation method against every other and the oracle."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from . import elimination, families, oracle
from .bipoly import X, EvalPoint
from .errors import DegeneratePoint
from .graphs import Graph, cycle, path, random_graph, star
from .quadfield import extract_integer


@dataclass(frozen=True)
class Methods:
    """The callables under test. Swap one out to check that the suites catch it."""

    path_sum: Callable = families.path_sum_poly
    path_rec: Callable = families.path_recurrence_poly
    cycle_sum: Callable = families.cycle_sum_poly
    cycle_rec: Callable = families.cycle_recurrence_poly
    cycle_alt: Callable = families.cycle_alternating_sum_poly
    path_closed: Callable = families.path_closedform_eval
    path_closed_quad: Callable = families.path_closedform_quad
    cycle_closed: Callable = families.cycle_closedform_eval
    power_sum_quad: Callable = families.power_sum_quad
    power_sum_rec: Callable = families.power_sum_recurrence
    elim_poly: Callable = elimination.bivariate_poly
    elim_value: Callable = elimination.bivariate_value
    count: Callable = oracle.count_colorings
    count_partitioned: Callable = oracle.count_colorings_partitioned


@dataclass
class CheckConfig:
    n_max: int = 10
    x_max: int = 4
    oracle_vertex_max: int = 6
    seed: int = 0
    corpus_size: int = 200
    identity_pairs: int = 100


@dataclass
class Counterexample:
    suite: str
    methods: tuple[str, ...]
    values: tuple
    point: Optional[EvalPoint] = None
    graph: Optional[Graph] = None
    n: Optional[int] = None

    def render(self) -> str:
        lines = [f"MISMATCH in suite {self.suite}"]
        if self.n is not None:
            lines.append(f"n: {self.n}")
        if self.point is not None:
            lines.append(f"point: x={self.point.x} y={self.point.y}")
        for name, value in zip(self.methods, self.values):
            lines.append(f"{name}: {value}")
        if self.graph is not None:
            lines.append("graph:")
            lines.append(self.graph.to_edge_list().rstrip("\n"))
        return "\n".join(lines)


class Mismatch(Exception):
    def __init__(self, cex: Counterexample):
        super().__init__(cex.render())
        self.counterexample = cex


@dataclass
class SuiteResult:
    name: str
    cases: int
    seconds: float
    counterexample: Optional[Counterexample] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


@dataclass
class CheckReport:
    results: list[SuiteResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def first_counterexample(self) -> Optional[Counterexample]:
        for r in self.results:
            if r.counterexample is not None:
                return r.counterexample
        return None

    def render(self) -> str:
        lines = [f"{'suite':<24}{'cases':>8}  result"]
        for r in self.results:
            status = "ok" if r.ok else "FAIL"
            lines.append(f"{r.name:<24}{r.cases:>8}  {status}")
        passed = sum(r.ok for r in self.results)
        lines.append(f"{passed}/{len(self.results)} suites passed")
        return "\n".join(lines)


def points(x_max: int) -> list[EvalPoint]:
    return [EvalPoint(x, y) for x in range(x_max + 1) for y in range(x + 1)]


def _agree(suite, names, values, **ctx) -> None:
    if any(v != values[0] for v in values[1:]):
        raise Mismatch(Counterexample(suite, tuple(names), tuple(values), **ctx))


def suite_path_polys(cfg: CheckConfig, m: Methods) -> Iterator[None]:
    for n in range(1, cfg.n_max + 1):
        vals = [m.path_sum(n), m.path_rec(n), m.elim_poly(path(n))]
        _agree("path-polys", ("sum", "rec", "elim"), vals, n=n, graph=path(n))
        yield


def suite_cycle_polys(cfg: CheckConfig, m: Methods) -> Iterator[None]:
    for n in range(3, cfg.n_max + 1):
        vals = [m.cycle_sum(n), m.cycle_rec(n), m.cycle_alt(n), m.elim_poly(cycle(n))]
        _agree("cycle-polys", ("sum", "rec", "alt", "elim"), vals, n=n, graph=cycle(n))
        yield


def suite_closed_forms(cfg: CheckConfig, m: Methods) -> Iterator[None]:
    for n in range(0, cfg.n_max + 1):
        poly = m.path_rec(n)
        for pt in points(cfg.x_max):
            if pt.is_degenerate:
                continue
            _agree("closed-forms", ("path-closed", "path-rec"),
                   [m.path_closed(n, pt), poly.eval(pt)], n=n, point=pt, graph=path(n))
            yield
    for n in range(3, cfg.n_max + 1):
        poly = m.cycle_rec(n)
        for pt in points(cfg.x_max):
            _agree("closed-forms", ("cycle-closed", "cycle-rec"),
                   [m.cycle_closed(n, pt), poly.eval(pt)], n=n, point=pt, graph=cycle(n))
            yield


def suite_degenerate(cfg: CheckConfig, m: Methods) -> Iterator[None]:
    pt = EvalPoint(1, 1)
    for n in range(0, cfg.n_max + 1):
        try:
            got = m.path_closed(n, pt)
        except DegeneratePoint:
            got = "DEGENERATE_POINT"
        _agree("degenerate", ("path-closed", "expected"), [got, "DEGENERATE_POINT"], n=n, point=pt)
        yield
    for n in range(3, cfg.n_max + 1):
        _agree("degenerate", ("cycle-closed", "expected"), [m.cycle_closed(n, pt), 0], n=n, point=pt)
        yield


def suite_power_sums(cfg: CheckConfig, m: Methods) -> Iterator[None]:
    for n in range(0, cfg.n_max + 1):
        for pt in points(cfg.x_max):
            if pt.is_degenerate:
                continue
            q = m.power_sum_quad(n, pt)
            _agree("power-sums", ("quad", "recurrence"),
                   [extract_integer(q), m.power_sum_rec(n, pt)], n=n, point=pt)
            if not q.d.is_square:
                _agree("power-sums", ("sqrt-part of r1^n+r2^n", "expected"), [q.b, 0], n=n, point=pt)
                c = m.path_closed_quad(n, pt)
                _agree("power-sums", ("sqrt-part of c1r1^n+c2r2^n", "expected"), [c.b, 0], n=n, point=pt)
            yield


def suite_chromatic(cfg: CheckConfig, m: Methods) -> Iterator[None]:
    for n in range(1, cfg.n_max + 1):
        _agree("chromatic", ("path-diag", "x(x-1)^(n-1)"),
               [m.path_rec(n).substitute_diagonal(), X * (X - 1) ** (n - 1)], n=n)
        yield
    for n in range(3, cfg.n_max + 1):
        _agree("chromatic", ("cycle-diag", "(x-1)^n+(-1)^n(x-1)"),
               [m.cycle_rec(n).substitute_diagonal(), (X - 1) ** n + (-1) ** n * (X - 1)], n=n)
        yield


def suite_oracle_families(cfg: CheckConfig, m: Methods) -> Iterator[None]:
    graphs = [path(n) for n in range(0, cfg.oracle_vertex_max + 1)]
    graphs += [cycle(n) for n in range(3, cfg.oracle_vertex_max + 1)]
    graphs += [star(n) for n in range(1, cfg.oracle_vertex_max + 1)]
    for g in graphs:
        poly = m.elim_poly(g)
        for pt in points(cfg.x_max):
            _agree("oracle-families", ("elim", "oracle"), [poly.eval(pt), m.count(g, pt)],
                   point=pt, graph=g)
            yield


def random_corpus(cfg: CheckConfig) -> list[Graph]:
    rng = random.Random(cfg.seed)
    out = []
    for _ in range(cfg.corpus_size):
        n = rng.randint(0, cfg.oracle_vertex_max)
        out.append(random_graph(rng, n, rng.choice((0.25, 0.5, 0.75))))
    return out


def suite_oracle_random(cfg: CheckConfig, m: Methods) -> Iterator[None]:
    for g in random_corpus(cfg):
        poly = m.elim_poly(g)
        for pt in points(cfg.x_max):
            want = m.count(g, pt)
            _agree("oracle-random", ("elim-poly", "elim-value", "oracle"),
                   [poly.eval(pt), m.elim_value(g, pt), want], point=pt, graph=g)
            yield
        pt = EvalPoint(cfg.x_max, cfg.x_max // 2)
        _agree("oracle-random", ("oracle", "oracle-partitioned"),
               [m.count(g, pt), m.count_partitioned(g, pt)], point=pt, graph=g)


def suite_elimination_identity(cfg: CheckConfig, m: Methods) -> Iterator[None]:
    rng = random.Random(cfg.seed + 1)
    done = 0
    while done < cfg.identity_pairs:
        g = random_graph(rng, rng.randint(2, cfg.oracle_vertex_max), 0.5)
        if not g.edges:
            continue
        e = rng.choice(g.edges)
        x = rng.randint(0, cfg.x_max)
        pt = EvalPoint(x, rng.randint(0, x))
        lhs = m.count(g, pt)
        rhs = (m.count(g.delete_edge(e), pt) - m.count(g.contract_edge(e), pt)
               + (pt.x - pt.y) * m.count(g.extract_edge(e), pt))
        _agree("elimination-identity", ("count(G)", "del - con + (x-y) ext"), [lhs, rhs],
               point=pt, graph=g)
        done += 1
        yield


SUITES: list[tuple[str, Callable]] = [
    ("path-polys", suite_path_polys),
    ("cycle-polys", suite_cycle_polys),
    ("closed-forms", suite_closed_forms),
    ("degenerate", suite_degenerate),
    ("power-sums", suite_power_sums),
    ("chromatic", suite_chromatic),
    ("oracle-families", suite_oracle_families),
    ("oracle-random", suite_oracle_random),
    ("elimination-identity", suite_elimination_identity),
]


def run_checks(cfg: CheckConfig | None = None, methods: Methods | None = None,
               stop_on_failure: bool = True) -> CheckReport:
    cfg = cfg or CheckConfig()
    methods = methods or Methods()
    report = CheckReport()
    for name, suite in SUITES:
        start, cases, cex = time.perf_counter(), 0, None
        try:
            for _ in suite(cfg, methods):
                cases += 1
        except Mismatch as exc:
            cex = exc.counterexample
        report.results.append(SuiteResult(name, cases, time.perf_counter() - start, cex))
        if cex is not None and stop_on_failure:
            break
    return report
