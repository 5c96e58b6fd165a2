"""Shared generators and independent brute-force oracles for the test suite.

The oracles recompute everything from the raw definitions (no reuse of
library construction or summation code), so library results are checked
against a second, independently written path.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from trilag.graphs import OrientedGraph, UndirectedGraph
from trilag.lagrangian import WeightVector


def rand_orientation(rng, n: int) -> OrientedGraph:
    arcs = []
    for (u, v) in itertools.combinations(range(n), 2):
        r = rng.randint(0, 2)
        if r == 1:
            arcs.append((u, v))
        elif r == 2:
            arcs.append((v, u))
    return OrientedGraph(n, arcs)


def rand_graph(rng, n: int, p: float = 0.5) -> UndirectedGraph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return UndirectedGraph(n, edges)


def rand_weights(rng, n: int, max_part: int = 30) -> WeightVector:
    """Random exact rational point on the simplex."""
    while True:
        parts = [rng.randint(0, max_part) for _ in range(n)]
        total = sum(parts)
        if total:
            return WeightVector([Fraction(a, total) for a in parts])


def all_orientations(n: int):
    """Every labeled orientation on n vertices (3^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (u, v), s in zip(pairs, states):
            if s == 1:
                arcs.append((u, v))
            elif s == 2:
                arcs.append((v, u))
        yield OrientedGraph(n, arcs)


def brute_lagrangian_cf(g: OrientedGraph, w) -> Fraction:
    """L_CF from the raw definition: classify each triple by hand."""
    total = Fraction(0)
    for (x, y, z) in itertools.combinations(range(g.n), 3):
        arcs = [
            (u, v) for (u, v) in itertools.permutations((x, y, z), 2) if (u, v) in g.arcs
        ]
        dom = any(
            (a, b) in g.arcs and (a, c) in g.arcs
            for (a, b, c) in ((x, y, z), (y, x, z), (z, x, y))
        )
        if len(arcs) >= 2 and not dom:
            total += w[x] * w[y] * w[z]
    for (u, v) in g.arcs:
        total += Fraction(1, 2) * w[u] * w[u] * w[v]
    return total


def brute_lagrangian_bf(g: UndirectedGraph, w) -> Fraction:
    """L_BF from the raw definition: triple scan plus edge sums."""
    total = Fraction(0)
    for (x, y, z) in itertools.combinations(range(g.n), 3):
        k = sum(
            1
            for (a, b) in ((x, y), (x, z), (y, z))
            if (min(a, b), max(a, b)) in g.edges
        )
        if k >= 2:
            total += w[x] * w[y] * w[z]
    esum = Fraction(0)
    for (u, v) in g.edges:
        total += Fraction(1, 2) * (w[u] * w[u] * w[v] + w[u] * w[v] * w[v])
        esum += w[u] * w[v]
    return total - Fraction(1, 2) * esum * esum


def delete_vertex_oriented(g: OrientedGraph, v: int) -> OrientedGraph:
    def shift(x):
        return x if x < v else x - 1

    return OrientedGraph(
        g.n - 1, [(shift(a), shift(b)) for (a, b) in g.arcs if v not in (a, b)]
    )
