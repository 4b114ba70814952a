"""Hamiltonian cycle search on cubic graphs."""

from __future__ import annotations

from .graph import CubicGraph

Cycle = tuple[int, ...]


def _walk(g: CubicGraph, first_only: bool) -> list[Cycle]:
    n = g.n
    adj = g.adj
    found: list[Cycle] = []
    path = [0]
    on_path = [False] * n
    on_path[0] = True

    # Each branch of the tree extends the path by one unvisited neighbor;
    # a cycle is kept only in the orientation path[1] < path[-1].
    def extend(v: int) -> bool:
        if len(path) == n:
            if 0 in adj[v] and path[1] < path[-1]:
                found.append(tuple(path))
                return first_only
            return False
        for u in adj[v]:
            if on_path[u]:
                continue
            on_path[u] = True
            path.append(u)
            stop = extend(u)
            path.pop()
            on_path[u] = False
            if stop:
                return True
        return False

    if n:
        extend(0)
    return found


def hamiltonian_cycles(g: CubicGraph) -> list[Cycle]:
    """All Hamiltonian cycles, one tuple per cycle, sorted.

    Each cycle starts at vertex 0 and runs toward the smaller of its two
    cycle neighbors of 0, so rotations and reversals are never repeated.
    """
    return sorted(_walk(g, first_only=False))


def is_hamiltonian(g: CubicGraph) -> bool:
    return bool(_walk(g, first_only=True))


def is_hamiltonian_cycle(g: CubicGraph, cycle) -> bool:
    n = g.n
    if len(cycle) != n or sorted(cycle) != list(range(n)):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n))


def normalize_cycle(cycle) -> Cycle:
    """Rotate to start at the lowest vertex and orient toward its lower neighbor."""
    cycle = list(cycle)
    i = cycle.index(min(cycle))
    cycle = cycle[i:] + cycle[:i]
    if len(cycle) > 2 and cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    return tuple(cycle)
