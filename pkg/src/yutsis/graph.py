"""Cubic graph representation, validation, distances and canonical labeling."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadVertex,
    Disconnected,
    DuplicateEdge,
    GraphError,
    Loop,
    OddVertexCount,
    TooSmall,
    WrongDegree,
)

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class CubicGraph:
    """Immutable simple 3-regular graph on vertices ``0..n-1``.

    Edges are stored sorted by (min endpoint, max endpoint). ``connected``
    flags whether the graph is connected; catalog graphs always are.
    """

    __slots__ = ("n", "edges", "adj", "connected", "_hash")

    def __init__(self, n: int, edges: Iterable[Edge], _checked: bool = False):
        edges = tuple(sorted(_norm(u, v) for u, v in edges))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "connected", _is_connected(n, self.adj))
        object.__setattr__(self, "_hash", hash((n, edges)))

    def __setattr__(self, name, value):
        raise AttributeError("CubicGraph is immutable")

    def __eq__(self, other):
        if not isinstance(other, CubicGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"CubicGraph(n={self.n}, edges={list(self.edges)})"

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def relabel(self, perm: Sequence[int]) -> "CubicGraph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return CubicGraph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def edge_text(self) -> str:
        return ",".join(f"{u}-{v}" for u, v in self.edges)


@dataclass(frozen=True)
class DirectedCubicGraph:
    """A cubic graph with every edge oriented ``(tail, head)``."""

    base: CubicGraph
    arcs: tuple[Edge, ...]
    labels: tuple[str, ...] = ()  # optional name per arc, aligned with arcs

    def __post_init__(self):
        if sorted(_norm(t, h) for t, h in self.arcs) != list(self.base.edges):
            raise GraphError("orientation must cover every edge exactly once")
        if self.labels and len(self.labels) != len(self.arcs):
            raise GraphError("one label per arc expected")

    @classmethod
    def low_to_high(cls, g: CubicGraph) -> "DirectedCubicGraph":
        """Orient every edge from the lower to the higher vertex number."""
        return cls(g, tuple(g.edges))

    @property
    def n(self) -> int:
        return self.base.n

    def out_degree(self, v: int) -> int:
        return sum(1 for t, _ in self.arcs if t == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for _, h in self.arcs if h == v)


def _is_connected(n: int, adj) -> bool:
    if n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def build_graph(n: int, edges: Iterable[Sequence[int]], allow_disconnected: bool = False) -> CubicGraph:
    """Validate an edge list and return a :class:`CubicGraph`.

    Raises the specific :mod:`yutsis.errors` subclass for the first problem
    found. Disconnected graphs raise :class:`Disconnected` unless
    ``allow_disconnected`` is set, in which case the result has
    ``connected == False``.
    """
    if n % 2:
        raise OddVertexCount(f"cubic graphs need an even vertex count, got {n}")
    if n < 4:
        raise TooSmall(f"cubic graphs need at least 4 vertices, got {n}")
    seen: set[Edge] = set()
    degree = [0] * n
    for pair in edges:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise BadVertex(f"edge ({u},{v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise Loop(f"loop at vertex {u}")
        e = _norm(u, v)
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {e[0]}-{e[1]}")
        seen.add(e)
        degree[u] += 1
        degree[v] += 1
    for v, d in enumerate(degree):
        if d != 3:
            raise WrongDegree(v, d)
    g = CubicGraph(n, seen)
    if not g.connected and not allow_disconnected:
        raise Disconnected("graph is not connected")
    return g


def bfs_distances(g: CubicGraph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def all_pairs_distances(g: CubicGraph) -> list[list[int]]:
    if not g.connected:
        raise Disconnected("distances are undefined on a disconnected graph")
    return [bfs_distances(g, v) for v in range(g.n)]


# --- canonical labeling -----------------------------------------------------
#
# Individualization/refinement: vertices carry colors equal to the start index
# of their cell in an ordered partition. Refinement splits cells by the sorted
# colors of neighbors; the search individualizes each vertex of the smallest
# non-singleton cell in turn. Every discrete partition is a relabeling, and the
# lexicographically least relabeled edge list over all leaves is canonical.


def _cell_starts(keys: list) -> list[int]:
    order = sorted(keys)
    start = {}
    for i, k in enumerate(order):
        start.setdefault(k, i)
    return [start[k] for k in keys]


def _refine(adj, colors: list[int]) -> list[int]:
    ncolors = len(set(colors))
    n = len(colors)
    while True:
        keys = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)]
        colors = _cell_starts(keys)
        k = len(set(colors))
        if k == ncolors:
            return colors
        ncolors = k


def _initial_colors(g: CubicGraph) -> list[int]:
    profiles = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        ecc = max(dist)
        counts = [0] * (ecc + 1)
        for d in dist:
            if d > 0:
                counts[d] += 1
        profiles.append(tuple(counts))
    return _cell_starts(profiles)


@dataclass(frozen=True)
class CanonicalForm:
    """Least relabeled edge list; ``perm[v]`` is the new label of vertex ``v``."""

    n: int
    edges: tuple[Edge, ...]
    perm: tuple[int, ...]

    def graph(self) -> CubicGraph:
        return CubicGraph(self.n, self.edges)


def canonical_form(g: CubicGraph) -> CanonicalForm:
    adj = g.adj
    n = g.n
    best_code = None
    best_perm = None

    def leaf_code(perm):
        return tuple(sorted(_norm(perm[u], perm[v]) for u, v in g.edges))

    stack = [_refine(adj, _initial_colors(g))]
    while stack:
        colors = stack.pop()
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            code = leaf_code(colors)
            if best_code is None or code < best_code:
                best_code, best_perm = code, colors
            continue
        c, cell = min(((c, cell) for c, cell in cells.items() if len(cell) > 1),
                      key=lambda item: (len(item[1]), item[0]))
        for v in reversed(cell):
            child = list(colors)
            for u in cell:
                if u != v:
                    child[u] = c + 1
            stack.append(_refine(adj, child))
    return CanonicalForm(n, best_code, tuple(best_perm))


def are_isomorphic(g1: CubicGraph, g2: CubicGraph) -> bool:
    if g1.n != g2.n:
        return False
    return canonical_form(g1).edges == canonical_form(g2).edges


# --- edge-list text ---------------------------------------------------------


def parse_edge_list(text: str, allow_disconnected: bool = False) -> CubicGraph:
    """Read ``n`` then ``u v`` lines; ``#`` starts a comment line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge list")
    try:
        n = int(lines[0])
        pairs = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise GraphError(f"expected 'u v', got {ln!r}")
            pairs.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    return build_graph(n, pairs, allow_disconnected=allow_disconnected)


def format_edge_list(g: CubicGraph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges]) + "\n"
