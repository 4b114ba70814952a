"""Exhaustive generation of connected cubic graphs up to isomorphism.

Graphs on ``n`` vertices are grown from smaller ones by two operations, and
duplicates are removed by canonical form:

* edge insertion: subdivide two distinct edges and join the two new
  vertices (adds 2 vertices); parents include two-component graphs so that
  bridges can be created;
* diamond insertion: replace an edge ``a-b`` by ``a-p``, a diamond
  (K4 minus the edge ``p-q``) and ``q-b`` (adds 4 vertices).

Every connected cubic graph on at least 6 vertices arises this way from a
smaller simple cubic graph; the counts 1, 2, 5, 19, 85, 509 for
n = 4..14 are checked by the test suite.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .errors import OddVertexCount, TooSmall
from .graph import CanonicalForm, CubicGraph, canonical_form

K4 = CubicGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def _check_n(n: int) -> None:
    if n % 2:
        raise OddVertexCount(f"cubic graphs need an even vertex count, got {n}")
    if n < 4:
        raise TooSmall(f"cubic graphs need at least 4 vertices, got {n}")


def insert_edge(g: CubicGraph, e1, e2) -> CubicGraph:
    """Subdivide ``e1`` and ``e2`` by new vertices ``n`` and ``n+1`` and join them."""
    n = g.n
    x, y = n, n + 1
    edges = [e for e in g.edges if e != e1 and e != e2]
    edges += [(e1[0], x), (x, e1[1]), (e2[0], y), (y, e2[1]), (x, y)]
    return CubicGraph(n + 2, edges)


def insert_diamond(g: CubicGraph, e) -> CubicGraph:
    n = g.n
    p, z, w, q = n, n + 1, n + 2, n + 3
    edges = [f for f in g.edges if f != e]
    edges += [(e[0], p), (p, z), (p, w), (z, w), (z, q), (w, q), (q, e[1])]
    return CubicGraph(n + 4, edges)


def disjoint_union(g: CubicGraph, h: CubicGraph) -> CubicGraph:
    shift = g.n
    edges = list(g.edges) + [(u + shift, v + shift) for u, v in h.edges]
    return CubicGraph(g.n + h.n, edges)


def _two_component_graphs(n: int):
    """Pairs (g, h) of connected graphs with g.n + h.n == n, g.n <= h.n."""
    for a in range(4, n // 2 + 1, 2):
        b = n - a
        if b < 4:
            continue
        if a == b:
            for g, h in combinations_with_replacement(_connected(a), 2):
                yield g, h
        else:
            for g in _connected(a):
                for h in _connected(b):
                    yield g, h


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[CubicGraph, ...]:
    """Connected cubic graphs on ``n`` vertices, each in canonical labeling."""
    if n == 4:
        return (canonical_form(K4).graph(),)
    found: dict[tuple, CanonicalForm] = {}

    def add(child: CubicGraph) -> None:
        cf = canonical_form(child)
        found.setdefault(cf.edges, cf)

    if n - 2 >= 4:
        for g in _connected(n - 2):
            for e1, e2 in combinations(g.edges, 2):
                add(insert_edge(g, e1, e2))
        for g, h in _two_component_graphs(n - 2):
            u = disjoint_union(g, h)
            left = [e for e in u.edges if e[0] < g.n]
            right = [e for e in u.edges if e[0] >= g.n]
            for e1 in left:
                for e2 in right:
                    add(insert_edge(u, e1, e2))
    if n - 4 >= 4:
        for g in _connected(n - 4):
            for e in g.edges:
                add(insert_diamond(g, e))
    return tuple(found[k].graph() for k in sorted(found))


def enumerate_cubic(n: int) -> list[CubicGraph]:
    """All connected simple cubic graphs on ``n`` vertices, canonically labeled.

    The list is sorted by canonical edge list, so repeated calls return the
    same order.
    """
    _check_n(n)
    return list(_connected(n))
