"""Labeled simple graphs on vertices ``0..n-1`` and the three edge eliminations.

After contraction or extraction the surviving vertices keep their relative
order and are compacted to ``0..k-1``. A contracted edge ``{u, v}`` with
``u < v`` merges into ``u``'s position.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CycleTooSmall, DomainError, EdgeNotPresent, GraphError, GraphParseError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        seen: set[Edge] = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {(u, v)} out of range for n={self.n}")
            e = normalize_edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def _check_edge(self, e: Sequence[int]) -> Edge:
        u, v = e
        ne = normalize_edge(u, v)
        if ne not in self.edges:
            raise EdgeNotPresent(f"edge {ne} not in graph")
        return ne

    def delete_edge(self, e: Sequence[int]) -> "Graph":
        ne = self._check_edge(e)
        return Graph(self.n, tuple(f for f in self.edges if f != ne))

    def contract_edge(self, e: Sequence[int]) -> "Graph":
        u, v = self._check_edge(e)

        def relabel(w: int) -> int:
            if w == v:
                return u
            return w - 1 if w > v else w

        new_edges: set[Edge] = set()
        for a, b in self.edges:
            a2, b2 = relabel(a), relabel(b)
            if a2 != b2:
                new_edges.add(normalize_edge(a2, b2))
        return Graph(self.n - 1, tuple(new_edges))

    def extract_edge(self, e: Sequence[int]) -> "Graph":
        u, v = self._check_edge(e)
        return self.remove_vertices((u, v))

    def remove_vertices(self, gone: Iterable[int]) -> "Graph":
        gone = set(gone)
        keep = [w for w in range(self.n) if w not in gone]
        index = {w: k for k, w in enumerate(keep)}
        edges = tuple(
            (index[a], index[b]) for a, b in self.edges if a in index and b in index
        )
        return Graph(len(keep), edges)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabeled in sorted order."""
        return self.remove_vertices(set(range(self.n)) - set(vertices))

    def connected_components(self) -> list["Graph"]:
        adj = self.adjacency()
        seen = [False] * self.n
        comps: list[Graph] = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack, members = [start], [start]
            while stack:
                w = stack.pop()
                for z in adj[w]:
                    if not seen[z]:
                        seen[z] = True
                        stack.append(z)
                        members.append(z)
            comps.append(self.induced(sorted(members)))
        return comps

    def canonical_key(self) -> bytes:
        body = ";".join(f"{u},{v}" for u, v in self.edges)
        return f"{self.n}|{body}".encode("ascii")

    def to_edge_list(self) -> str:
        lines = [f"p {self.n}"] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


# module-level aliases matching the operation names
def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    return g.delete_edge(e)


def contract_edge(g: Graph, e: Sequence[int]) -> Graph:
    return g.contract_edge(e)


def extract_edge(g: Graph, e: Sequence[int]) -> Graph:
    return g.extract_edge(e)


def connected_components(g: Graph) -> list[Graph]:
    return g.connected_components()


def canonical_key(g: Graph) -> bytes:
    return g.canonical_key()


def render_edge_list(g: Graph) -> str:
    return g.to_edge_list()


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


def path(n: int) -> Graph:
    if n < 0:
        raise DomainError(f"path needs n >= 0, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise CycleTooSmall(f"cycle needs n >= 3, got {n}")
    return Graph(n, tuple(normalize_edge(i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"star needs n >= 1, got {n}")
    return Graph(n, tuple((0, i) for i in range(1, n)))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, tuple(edges))


def parse_edge_list(text: str) -> Graph:
    """Read the ``p N`` / ``u v`` edge-list format; ``#`` lines are comments."""
    n: int | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if n is None:
            if len(tok) != 2 or tok[0] != "p":
                raise GraphParseError("expected header 'p N'", line=lineno)
            n = _parse_int(tok[1], lineno)
            if n < 0:
                raise GraphParseError("vertex count must be nonnegative", line=lineno)
            continue
        if len(tok) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", line=lineno)
        u, v = _parse_int(tok[0], lineno), _parse_int(tok[1], lineno)
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", "LOOP_REJECTED", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(
                f"vertex out of range in edge {u} {v} (n={n})", "VERTEX_OUT_OF_RANGE", lineno
            )
        e = normalize_edge(u, v)
        if e in seen:
            raise GraphParseError(f"duplicate edge {u} {v}", "DUPLICATE_EDGE", lineno)
        seen.add(e)
        edges.append(e)
    if n is None:
        raise GraphParseError("missing header 'p N'")
    return Graph(n, tuple(edges))


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphParseError(f"not an integer: {tok!r}", line=lineno) from None
