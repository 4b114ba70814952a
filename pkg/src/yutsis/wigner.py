"""Closed products of Wigner 3jm symbols and their Yutsis graphs.

Input is one factor per line with three whitespace-separated columns, each
``+label`` or ``-label`` (the sign of that column's m). ``#`` starts a
comment. Every label must occur in exactly two factors, once per sign.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import (
    BadToken,
    Disconnected,
    FactorArity,
    LabelCount,
    LabelRepeatInFactor,
    MultiEdge,
    OddFactorCount,
    SameSignPair,
)
from .graph import CubicGraph, DirectedCubicGraph

_TOKEN = re.compile(r"^([+-])([A-Za-z0-9_:]+)$")


@dataclass(frozen=True)
class Column:
    sign: str
    label: str

    def __str__(self) -> str:
        return f"{self.sign}{self.label}"


@dataclass(frozen=True)
class WignerFactor:
    columns: tuple[Column, Column, Column]
    line: int = 0


@dataclass(frozen=True)
class WignerSum:
    factors: tuple[WignerFactor, ...]

    @property
    def n(self) -> int:
        return len(self.factors)

    def labels(self) -> list[str]:
        seen: dict[str, None] = {}
        for f in self.factors:
            for c in f.columns:
                seen.setdefault(c.label)
        return list(seen)

    def reversed_signs(self) -> "WignerSum":
        flip = {"+": "-", "-": "+"}
        return WignerSum(tuple(
            WignerFactor(tuple(Column(flip[c.sign], c.label) for c in f.columns), f.line)
            for f in self.factors))

    def to_text(self) -> str:
        return "".join(" ".join(str(c) for c in f.columns) + "\n" for f in self.factors)


def parse_wigner(text: str) -> WignerSum:
    factors = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        cols = []
        for tok in body:
            m = _TOKEN.match(tok)
            if m is None:
                raise BadToken(f"bad column {tok!r}; expected +label or -label", lineno)
            cols.append(Column(m.group(1), m.group(2)))
        if len(cols) != 3:
            raise FactorArity(f"factor has {len(cols)} columns, expected 3", lineno)
        names = [c.label for c in cols]
        for name in names:
            if names.count(name) > 1:
                raise LabelRepeatInFactor(f"label {name!r} repeated within one factor", lineno)
        factors.append(WignerFactor(tuple(cols), lineno))

    if len(factors) % 2:
        raise OddFactorCount(f"{len(factors)} factors; a closed sum needs an even number")
    where: dict[str, list[tuple[str, int]]] = {}
    for f in factors:
        for c in f.columns:
            where.setdefault(c.label, []).append((c.sign, f.line))
    for label, occ in where.items():
        if len(occ) != 2:
            lines = ", ".join(str(ln) for _, ln in occ)
            raise LabelCount(f"label {label!r} occurs {len(occ)} times (lines {lines}), expected 2",
                             occ[-1][1])
        if occ[0][0] == occ[1][0]:
            raise SameSignPair(f"label {label!r} appears twice with sign {occ[0][0]}; "
                               "a closed sum pairs each m with -m", occ[1][1])
    return WignerSum(tuple(factors))


def sum_to_graph(s: WignerSum) -> DirectedCubicGraph:
    """Vertex per factor (input order), arc per label from '+' to '-' factor.

    A disconnected result is returned with ``base.connected == False``.
    """
    ends: dict[str, dict[str, int]] = {}
    for i, f in enumerate(s.factors):
        for c in f.columns:
            ends.setdefault(c.label, {})[c.sign] = i
    arcs = []
    labels = []
    pairs: dict[tuple[int, int], str] = {}
    for label, e in ends.items():
        tail, head = e["+"], e["-"]
        key = (min(tail, head), max(tail, head))
        if key in pairs:
            raise MultiEdge(f"factors {key[0]} and {key[1]} share labels {pairs[key]!r} and "
                            f"{label!r}; only simple graphs are supported")
        pairs[key] = label
        arcs.append((tail, head))
        labels.append(label)
    base = CubicGraph(s.n, arcs)
    order = sorted(range(len(arcs)), key=lambda k: (min(arcs[k]), max(arcs[k])))
    return DirectedCubicGraph(base, tuple(arcs[k] for k in order), tuple(labels[k] for k in order))


def vertex_pair_labels(s: WignerSum) -> dict[str, str]:
    """Map each label to the ``j_uv`` name of the factor pair it joins."""
    d = sum_to_graph(s)
    return {lab: f"j{min(t, h)}_{max(t, h)}" for lab, (t, h) in zip(d.labels, d.arcs)}


def graph_to_sum(g: CubicGraph) -> WignerSum:
    """Closed sum whose Yutsis graph is ``g``, labels ``j<u>_<v>``, '+' on the lower vertex."""
    cols: list[list[Column]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        name = f"j{u}_{v}"
        cols[u].append(Column("+", name))
        cols[v].append(Column("-", name))
    return WignerSum(tuple(WignerFactor(tuple(c), i + 1) for i, c in enumerate(cols)))


def symbol_name(n: int) -> str:
    return f"{3 * n // 2}j"


@dataclass(frozen=True)
class Identification:
    symbol: str
    entry: object
    kind: Optional[str] = None

    @property
    def name(self) -> str:
        parts = [self.symbol]
        code = getattr(self.entry, "tag", "")
        if code.startswith("IRR"):
            if self.entry.n > 6:
                parts.append("irreducible")
        elif code:
            parts.append(f"reducible ({code})")
        if self.kind:
            parts.append(self.kind)
        return ", ".join(parts)


def identify(s: WignerSum, catalog) -> Identification:
    """Catalog entry isomorphic to the sum's graph, with its symbol name."""
    from .catalog import lookup
    from .names import kind_of

    d = sum_to_graph(s)
    if not d.base.connected:
        raise Disconnected("the sum factorizes into independent closed sums")
    entry = lookup(d.base, catalog)
    return Identification(symbol_name(d.n), entry, kind_of(d.base))
