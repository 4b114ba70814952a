"""Edge connectivity, cyclic edge connectivity and the Yutsis classification.

All searches are exhaustive over vertex bipartitions ``(S, V - S)`` encoded as
bitmasks; at n <= 14 that is at most 2**13 sets per graph. The cut of a
bipartition is its set of crossing edges, and every minimal edge cut of a
connected graph is such a set with both sides connected.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import Disconnected
from .graph import CubicGraph, Edge


class YutsisTag(Enum):
    ONE_CONNECTED = "C1"
    TWO_CONNECTED = "C2"
    THREE_CONNECTED_REDUCIBLE = "C3R"
    IRREDUCIBLE = "IRR"


def tag_rank(code: str) -> int:
    """Sort key for class codes: C1 < C2 < C3R < any IRR."""
    return {"C1": 0, "C2": 1, "C3R": 2}.get(code, 3)


@dataclass(frozen=True)
class CutWitness:
    edges: tuple[Edge, ...]
    side_sizes: tuple[int, int]


@dataclass(frozen=True)
class YutsisClass:
    tag: YutsisTag
    cyclic_connectivity: Optional[int] = None
    witness: Optional[CutWitness] = None

    @property
    def is_irreducible(self) -> bool:
        return self.tag is YutsisTag.IRREDUCIBLE

    @property
    def code(self) -> str:
        """Catalog tag: C1, C2, C3R, IRR4, IRR5 or IRR* (no cyclic cut)."""
        if self.tag is not YutsisTag.IRREDUCIBLE:
            return self.tag.value
        if self.cyclic_connectivity is None:
            return "IRR*"
        return f"IRR{self.cyclic_connectivity}"


def _masks(g: CubicGraph) -> list[int]:
    return [sum(1 << u for u in g.adj[v]) for v in range(g.n)]


def _is_connected_mask(nbr: list[int], mask: int) -> bool:
    if not mask:
        return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        grow = 0
        m = frontier
        while m:
            low = m & -m
            grow |= nbr[low.bit_length() - 1]
            m ^= low
        grow &= mask & ~seen
        seen |= grow
        frontier = grow
    return seen == mask


@lru_cache(maxsize=1024)
def _cut_table(g: CubicGraph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Masks, cut sizes and side sizes of every bipartition of ``g``.

    Only masks containing the highest vertex are listed, so each bipartition
    appears once.
    """
    n = g.n
    top = 1 << (n - 1)
    masks = np.arange(top, (1 << n) - 1, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n)) & 1
    u = np.array([e[0] for e in g.edges])
    v = np.array([e[1] for e in g.edges])
    cut = (bits[:, u] ^ bits[:, v]).sum(axis=1)
    size = bits.sum(axis=1)
    return masks, cut, size


def _both_sides_connected(g: CubicGraph, mask: int) -> bool:
    nbr = _masks(g)
    full = (1 << g.n) - 1
    return _is_connected_mask(nbr, mask) and _is_connected_mask(nbr, full & ~mask)


def _cut_edges(g: CubicGraph, mask: int) -> tuple[Edge, ...]:
    return tuple(e for e in g.edges if ((mask >> e[0]) & 1) != ((mask >> e[1]) & 1))


def _require_connected(g: CubicGraph) -> None:
    if not g.connected:
        raise Disconnected("connectivity is defined for connected graphs only")


def edge_connectivity(g: CubicGraph) -> int:
    """Minimum number of edges whose removal disconnects ``g`` (at most 3)."""
    _require_connected(g)
    return int(_cut_table(g)[1].min())


def cyclic_edge_connectivity(g: CubicGraph) -> Optional[int]:
    """Smallest cut leaving two connected sides that both contain a cycle.

    Returns ``None`` when no such cut exists (K4 and K_{3,3}).
    """
    _require_connected(g)
    n = g.n
    masks, cut, size = _cut_table(g)
    inner = (3 * size - cut) // 2
    outer = 3 * n // 2 - cut - inner
    ok = (inner >= size) & (outer >= n - size)
    for i in np.flatnonzero(ok)[np.argsort(cut[ok], kind="stable")]:
        if _both_sides_connected(g, int(masks[i])):
            return int(cut[i])
    return None


def _witness(g: CubicGraph, size: int, min_side: int) -> Optional[CutWitness]:
    n = g.n
    masks, cut, side = _cut_table(g)
    ok = (cut == size) & (side >= min_side) & (n - side >= min_side)
    best = None
    for i in np.flatnonzero(ok):
        mask = int(masks[i])
        if not _both_sides_connected(g, mask):
            continue
        edges = _cut_edges(g, mask)
        if best is None or edges < best.edges:
            k = int(side[i])
            best = CutWitness(edges, tuple(sorted((k, n - k))))
    return best


def classify(g: CubicGraph) -> YutsisClass:
    lam = edge_connectivity(g)
    if lam == 1:
        return YutsisClass(YutsisTag.ONE_CONNECTED, witness=_witness(g, 1, 1))
    if lam == 2:
        return YutsisClass(YutsisTag.TWO_CONNECTED, witness=_witness(g, 2, 1))
    w = _witness(g, 3, 2)
    if w is not None:
        return YutsisClass(YutsisTag.THREE_CONNECTED_REDUCIBLE, witness=w)
    return YutsisClass(YutsisTag.IRREDUCIBLE, cyclic_edge_connectivity(g))


def cut_disconnects(g: CubicGraph, edges) -> tuple[int, ...]:
    """Component sizes of ``g`` after deleting ``edges`` (sorted)."""
    removed = {tuple(sorted(e)) for e in edges}
    adj = {v: [u for u in g.adj[v] if tuple(sorted((u, v))) not in removed] for v in range(g.n)}
    seen: set[int] = set()
    sizes = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        sizes.append(len(comp))
    return tuple(sorted(sizes))
