"""Test-only oracles that share no code with the library's computation paths."""

from __future__ import annotations

import itertools
from fractions import Fraction

from bichrom.bipoly import BiPolynomial


def naive_count(n: int, edges, x: int, y: int) -> int:
    """Plain itertools enumeration of all x**n colorings."""
    total = 0
    for f in itertools.product(range(1, x + 1), repeat=n):
        if all(f[u] != f[v] or f[u] > y for u, v in edges):
            total += 1
    return total


def solve(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(A)
    M = [row[:] + [b[i]] for i, row in enumerate(A)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col] / M[col][col]
                for k in range(col, n + 1):
                    M[r][k] -= f * M[col][k]
    return [M[i][n] / M[i][i] for i in range(n)]


def interpolate_from_counts(n: int, edges) -> BiPolynomial:
    """Recover the degree-<=n polynomial from brute-force counts on 0 <= y <= x <= n.

    Those (n+1)(n+2)/2 points determine a bivariate polynomial of total
    degree n uniquely.
    """
    monos = [(i, j) for d in range(n + 1) for i in range(d + 1) for j in [d - i]]
    pts = [(x, y) for x in range(n + 1) for y in range(x + 1)]
    A = [[Fraction(x**i * y**j) for i, j in monos] for x, y in pts]
    b = [Fraction(naive_count(n, edges, x, y)) for x, y in pts]
    coeffs = solve(A, b)
    assert all(c.denominator == 1 for c in coeffs)
    return BiPolynomial({m: int(c) for m, c in zip(monos, coeffs)})
