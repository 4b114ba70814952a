"""LCF (Lederberg-Coxeter-Frucht) notation for Hamiltonian cubic graphs.

A vector holds, for each position along a Hamiltonian cycle, the signed
number of steps to the other end of that vertex's chord. Entries lie in
``(-n/2, n/2]``; the two text contractions are the exponent form
``[a,b]^f`` and the anti-palindrome form ``[a,b;-]``.
"""

from __future__ import annotations

import re
from typing import Optional, Sequence

from .errors import ChordCollision, IllegalDistance, InconsistentChords, NotACycle, ParseError
from .graph import CubicGraph, are_isomorphic, build_graph
from .hamilton import hamiltonian_cycles, is_hamiltonian_cycle

LcfVector = tuple[int, ...]

_LCF_RE = re.compile(
    r"""^\s*\[\s*
        (?P<body>[+-]?\d+(?:\s*,\s*[+-]?\d+)*)
        \s*(?P<anti>;\s*-)?\s*\]
        (?:\s*\^\s*(?P<exp>\d+))?\s*$""",
    re.VERBOSE,
)


def _wrap(d: int, n: int) -> int:
    """Reduce a step count into the half-open interval (-n/2, n/2]."""
    d %= n
    return d - n if d > n // 2 else d


def encode_cycle(g: CubicGraph, cycle: Sequence[int]) -> LcfVector:
    """Chord distances of ``g`` along ``cycle``."""
    n = g.n
    if not is_hamiltonian_cycle(g, cycle):
        raise NotACycle("sequence is not a Hamiltonian cycle of the graph")
    pos = {v: i for i, v in enumerate(cycle)}
    out = []
    for i, v in enumerate(cycle):
        ring = {cycle[i - 1], cycle[(i + 1) % n]}
        (w,) = [u for u in g.adj[v] if u not in ring]
        out.append(_wrap(pos[w] - i, n))
    return tuple(out)


def _negate(vec: Sequence[int], n: int) -> list[int]:
    return [_wrap(-d, n) for d in vec]


def contract(vec: Sequence[int]) -> str:
    """Shortest text form: exponent, else anti-palindrome, else plain list."""
    vec = list(vec)
    n = len(vec)
    for p in range(1, n // 2 + 1):
        if n % p == 0 and vec == vec[:p] * (n // p):
            return f"[{','.join(map(str, vec[:p]))}]^{n // p}"
    if n % 2 == 0:
        half = vec[: n // 2]
        if vec[n // 2:] == _negate(reversed(half), n):
            return f"[{','.join(map(str, half))};-]"
    return f"[{','.join(map(str, vec))}]"


def _validate(vec: list[int]) -> None:
    n = len(vec)
    for i, d in enumerate(vec):
        if d in (0, 1, -1):
            raise IllegalDistance(f"distance {d} at position {i} is not allowed")
        if not (-n / 2 < d <= n / 2):
            raise IllegalDistance(f"distance {d} at position {i} is outside (-{n}/2, {n}/2]")
    targets: dict[int, int] = {}
    for i, d in enumerate(vec):
        t = (i + d) % n
        if t in targets:
            raise ChordCollision(f"vertex {t} receives chords from {targets[t]} and {i}")
        targets[t] = i
    for i, d in enumerate(vec):
        t = (i + d) % n
        if (t + vec[t]) % n != i:
            raise InconsistentChords(f"chord {i}->{t} is not matched by a chord {t}->{i}")


def expand(text: str) -> LcfVector:
    """Parse LCF text into the full distance vector."""
    m = _LCF_RE.match(text)
    if m is None:
        raise ParseError(f"not LCF notation: {text!r}")
    vec = [int(x) for x in m.group("body").split(",")]
    if m.group("anti"):
        # length known only after doubling; negate within the final interval
        n = 2 * len(vec)
        vec = vec + _negate(reversed(vec), n)
    if m.group("exp"):
        f = int(m.group("exp"))
        if f < 1:
            raise ParseError("exponent must be positive")
        vec = vec * f
    _validate(vec)
    return tuple(vec)


def vector_to_graph(vec: Sequence[int]) -> CubicGraph:
    n = len(vec)
    edges = {(i, (i + 1) % n) for i in range(n)}
    edges |= {(i, (i + d) % n) for i, d in enumerate(vec)}
    return build_graph(n, {tuple(sorted(e)) for e in edges})


def decode(text: str) -> tuple[CubicGraph, tuple[int, ...]]:
    """Graph described by ``text`` and its Hamiltonian cycle ``0, 1, ..., n-1``."""
    vec = expand(text)
    return vector_to_graph(vec), tuple(range(len(vec)))


def cycle_vectors(g: CubicGraph, cycle: Sequence[int]) -> list[LcfVector]:
    """Vectors of one cycle over all starting points and both directions."""
    cycle = list(cycle)
    n = len(cycle)
    out = []
    for seq in (cycle, cycle[::-1]):
        for r in range(n):
            out.append(encode_cycle(g, seq[r:] + seq[:r]))
    return out


def cycle_min_vector(g: CubicGraph, cycle: Sequence[int]) -> LcfVector:
    return min(cycle_vectors(g, cycle))


def canonical_vector(g: CubicGraph) -> Optional[LcfVector]:
    cycles = hamiltonian_cycles(g)
    if not cycles:
        return None
    return min(cycle_min_vector(g, c) for c in cycles)


def canonical_lcf(g: CubicGraph) -> Optional[str]:
    """Contracted least LCF vector of ``g``, or ``None`` if not Hamiltonian."""
    vec = canonical_vector(g)
    return None if vec is None else contract(vec)


def lcf_alternatives(g: CubicGraph) -> list[str]:
    """Distinct contracted LCF names over all Hamiltonian cycles, least first."""
    vecs = sorted({cycle_min_vector(g, c) for c in hamiltonian_cycles(g)})
    names: list[str] = []
    for v in vecs:
        t = contract(v)
        if t not in names:
            names.append(t)
    return names


def lcf_equivalent(a: str, b: str) -> bool:
    return are_isomorphic(decode(a)[0], decode(b)[0])
