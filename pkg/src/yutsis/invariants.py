"""Wiener index, diameter, girth, Estrada index and the invariant key."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import YutsisError
from .graph import CubicGraph, all_pairs_distances, bfs_distances

EE_SCALE = 10**5


class EigenNonConvergence(YutsisError):
    pass


def wiener(g: CubicGraph) -> int:
    dist = all_pairs_distances(g)
    return sum(dist[u][v] for u in range(g.n) for v in range(u + 1, g.n))


def diameter(g: CubicGraph) -> int:
    return max(max(row) for row in all_pairs_distances(g))


def girth(g: CubicGraph) -> int:
    """Length of the shortest cycle, by BFS from every vertex."""
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = [s]
        for v in queue:
            for u in g.adj[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return int(best)


def adjacency_matrix(g: CubicGraph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def jacobi_eigenvalues(a: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = math.sqrt(float(np.sum(np.triu(a, 1) ** 2)))
        if off < tol:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
    raise EigenNonConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")


def spectrum(g: CubicGraph) -> np.ndarray:
    return jacobi_eigenvalues(adjacency_matrix(g))


def estrada_exact(g: CubicGraph) -> float:
    return float(math.fsum(math.exp(x) for x in spectrum(g)))


def round_scaled(x: float, scale: int = EE_SCALE) -> int:
    """``x * scale`` rounded half away from zero."""
    y = abs(x) * scale
    r = math.floor(y + 0.5)
    return int(r if x >= 0 else -r)


def estrada(g: CubicGraph) -> int:
    """Estrada index as an integer count of 1e-5 units."""
    return round_scaled(estrada_exact(g))


def format_scaled(value: int, digits: int = 5) -> str:
    sign = "-" if value < 0 else ""
    q, r = divmod(abs(value), 10**digits)
    return f"{sign}{q}.{r:0{digits}d}"


@dataclass(frozen=True, order=True)
class InvariantKey:
    wiener: int
    diameter: int
    girth: int
    estrada: int  # EE * 10**5

    def __str__(self) -> str:
        return f"W{self.wiener} d{self.diameter} g{self.girth} EE{format_scaled(self.estrada)}"


def invariant_key(g: CubicGraph) -> InvariantKey:
    dist = all_pairs_distances(g)
    n = g.n
    w = sum(dist[u][v] for u in range(n) for v in range(u + 1, n))
    d = max(max(row) for row in dist)
    return InvariantKey(w, d, girth(g), estrada(g))


def eccentricities(g: CubicGraph) -> list[int]:
    return [max(bfs_distances(g, v)) for v in range(g.n)]
