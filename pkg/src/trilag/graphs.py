"""Oriented graphs, undirected graphs, 3-graphs, and the triple constructions.

An orientation is a loopless digraph with no antiparallel arc pair, so its
arcs biject with the edges of the underlying undirected graph.  From an
orientation we build two complementary 3-uniform systems:

  F  -- triples whose induced subdigraph has at most one arc, or in which
        some vertex has arcs to both others (a "dominator");
  CF -- triples with at least two induced arcs and no dominator.

From an undirected graph we build

  BF -- triples whose induced subgraph spans at least two edges.

CF is the complement of F within all C(n,3) triples, and CF is contained
in BF of the underlying graph; both facts are exercised exhaustively in
the test suite.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb


class OrientedGraph:
    """Loopless digraph with no antiparallel arcs, on vertices 0..n-1."""

    __slots__ = ("n", "arcs")

    def __init__(self, n: int, arcs) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        arcset = frozenset(tuple(a) for a in arcs)
        for (u, v) in arcset:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if (v, u) in arcset:
                raise ValueError(f"antiparallel pair {u}<->{v}: not an orientation")
        self.n = n
        self.arcs = arcset

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def out_neighbors(self, u: int) -> list[int]:
        return sorted(v for (x, v) in self.arcs if x == u)

    def relabel(self, perm) -> "OrientedGraph":
        """Apply a vertex permutation (perm[v] is the new label of v)."""
        return OrientedGraph(self.n, ((perm[u], perm[v]) for (u, v) in self.arcs))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrientedGraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"OrientedGraph(n={self.n}, arcs={self.sorted_arcs()})"


class UndirectedGraph:
    """Simple graph; edges stored once as (min,max) pairs."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {{{u},{v}}} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            canon.add((min(u, v), max(u, v)))
        self.n = n
        self.edges = frozenset(canon)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, u: int) -> list[int]:
        out = []
        for (a, b) in self.edges:
            if a == u:
                out.append(b)
            elif b == u:
                out.append(a)
        return sorted(out)

    def is_complete(self) -> bool:
        return len(self.edges) == comb(self.n, 2)

    def non_edges(self) -> list[tuple[int, int]]:
        """Non-adjacent pairs, lexicographically sorted."""
        return [
            (u, v)
            for u, v in itertools.combinations(range(self.n), 2)
            if (u, v) not in self.edges
        ]

    def delete_vertex(self, v: int) -> "UndirectedGraph":
        """Remove vertex v; vertices above v shift down by one."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")

        def shift(x):
            return x if x < v else x - 1

        kept = [(shift(a), shift(b)) for (a, b) in self.edges if v not in (a, b)]
        return UndirectedGraph(self.n - 1, kept)

    def relabel(self, perm) -> "UndirectedGraph":
        return UndirectedGraph(self.n, ((perm[u], perm[v]) for (u, v) in self.edges))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UndirectedGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, edges={self.sorted_edges()})"


class TripleSystem:
    """3-uniform hypergraph; triples stored sorted ascending."""

    __slots__ = ("n", "triples")

    def __init__(self, n: int, triples) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = set()
        for t in triples:
            x, y, z = sorted(t)
            if len({x, y, z}) != 3:
                raise ValueError(f"triple {t} has repeated vertices")
            if not (0 <= x and z < n):
                raise ValueError(f"triple {t} out of range for n={n}")
            canon.add((x, y, z))
        self.n = n
        self.triples = frozenset(canon)

    def sorted_triples(self) -> list[tuple[int, int, int]]:
        return sorted(self.triples)

    def __contains__(self, t) -> bool:
        return tuple(sorted(t)) in self.triples

    def __len__(self) -> int:
        return len(self.triples)

    def relabel(self, perm) -> "TripleSystem":
        return TripleSystem(
            self.n, ((perm[x], perm[y], perm[z]) for (x, y, z) in self.triples)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TripleSystem)
            and self.n == other.n
            and self.triples == other.triples
        )

    def __hash__(self) -> int:
        return hash((self.n, self.triples))

    def __repr__(self) -> str:
        return f"TripleSystem(n={self.n}, triples={self.sorted_triples()})"


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, itertools.combinations(range(n), 2))


def _induced_arcs(g: OrientedGraph, x: int, y: int, z: int):
    """Arcs of g inside {x,y,z}."""
    out = []
    for (u, v) in itertools.permutations((x, y, z), 2):
        if (u, v) in g.arcs:
            out.append((u, v))
    return out


def _dominator(g: OrientedGraph, x: int, y: int, z: int):
    """Vertex of the triple with arcs to both others, or None.

    An orientation admits at most one dominator per triple: two would
    force an antiparallel pair between them.
    """
    for (a, b, c) in ((x, y, z), (y, x, z), (z, x, y)):
        if (a, b) in g.arcs and (a, c) in g.arcs:
            return a
    return None


def build_f(g: OrientedGraph) -> TripleSystem:
    """Triples with at most one induced arc, or with a dominator."""
    triples = []
    for (x, y, z) in itertools.combinations(range(g.n), 3):
        if len(_induced_arcs(g, x, y, z)) <= 1 or _dominator(g, x, y, z) is not None:
            triples.append((x, y, z))
    return TripleSystem(g.n, triples)


def build_cf(g: OrientedGraph) -> TripleSystem:
    """Triples with at least two induced arcs and no dominator.

    Complement of build_f within all C(n,3) triples.
    """
    triples = []
    for (x, y, z) in itertools.combinations(range(g.n), 3):
        if len(_induced_arcs(g, x, y, z)) >= 2 and _dominator(g, x, y, z) is None:
            triples.append((x, y, z))
    return TripleSystem(g.n, triples)


def build_bf(g: UndirectedGraph) -> TripleSystem:
    """Triples spanning at least two edges of g."""
    triples = []
    for (x, y, z) in itertools.combinations(range(g.n), 3):
        k = g.has_edge(x, y) + g.has_edge(x, z) + g.has_edge(y, z)
        if k >= 2:
            triples.append((x, y, z))
    return TripleSystem(g.n, triples)


def underlying(g: OrientedGraph) -> UndirectedGraph:
    """Forget arc directions.  |edges| = |arcs| since g is an orientation."""
    return UndirectedGraph(g.n, g.arcs)


def edge_density(t: TripleSystem) -> Fraction:
    """|triples| / C(n,3), exact."""
    if t.n < 3:
        raise ValueError("edge density needs at least 3 vertices")
    return Fraction(len(t.triples), comb(t.n, 3))


def has_induced_directed_c4(g: OrientedGraph):
    """Detect an induced directed 4-cycle.

    Returns (True, (a,b,c,d)) with the witness in cycle order when some
    4-set induces exactly the four arcs a->b->c->d->a, else (False, None).
    """
    for quad in itertools.combinations(range(g.n), 4):
        induced = sum(
            1 for (u, v) in itertools.permutations(quad, 2) if (u, v) in g.arcs
        )
        if induced != 4:
            continue
        a = quad[0]
        for (b, c, d) in itertools.permutations(quad[1:]):
            if (
                (a, b) in g.arcs
                and (b, c) in g.arcs
                and (c, d) in g.arcs
                and (d, a) in g.arcs
            ):
                return True, (a, b, c, d)
    return False, None


def has_independent_4set(t: TripleSystem):
    """Detect four vertices spanning none of the system's triples.

    Returns (True, quad) with the witness sorted ascending, else
    (False, None).
    """
    if t.n < 4:
        raise ValueError("independent 4-set check needs at least 4 vertices")
    for quad in itertools.combinations(range(t.n), 4):
        if not any(sub in t.triples for sub in itertools.combinations(quad, 3)):
            return True, quad
    return False, None
