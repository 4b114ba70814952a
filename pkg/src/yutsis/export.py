"""Graphviz dot, MDL V2000 molfile and ring-closure SMILES writers."""

from __future__ import annotations

import re
from typing import Optional, Sequence, Union

from .connectivity import classify
from .errors import NonHamiltonian, NotACycle, YutsisError
from .graph import CubicGraph, DirectedCubicGraph
from .hamilton import hamiltonian_cycles, is_hamiltonian_cycle


def export_dot(g: Union[CubicGraph, DirectedCubicGraph], name: str = "G") -> str:
    """Digraph text; undirected edges run low -> high, cut witness edges are red."""
    d = g if isinstance(g, DirectedCubicGraph) else DirectedCubicGraph.low_to_high(g)
    red: set = set()
    if d.base.connected:
        w = classify(d.base).witness
        if w is not None:
            red = set(w.edges)
    lines = [f"digraph {name} {{"]
    labels = d.labels or (None,) * len(d.arcs)
    for (t, h), lab in zip(d.arcs, labels):
        attrs = []
        if lab is not None:
            attrs.append(f'label="{lab}"')
        if (min(t, h), max(t, h)) in red:
            attrs.append("color=red")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {t} -> {h}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_molfile(g: CubicGraph, coordinates: Optional[Sequence[Sequence[float]]] = None,
                   title: str = "") -> str:
    n = g.n
    coords = coordinates if coordinates is not None else [(0.0, 0.0, 0.0)] * n
    if len(coords) != n:
        raise YutsisError(f"need {n} coordinates, got {len(coords)}")
    out = [title, "  yutsis", ""]
    out.append(f"{n:3d}{len(g.edges):3d}  0  0  0  0  0  0  0  0999 V2000")
    for x, y, z in coords:
        out.append(f"{x:10.4f}{y:10.4f}{z:10.4f} C   0  0  0  0  0  0  0  0  0  0  0  0")
    for u, v in g.edges:
        out.append(f"{u + 1:3d}{v + 1:3d}  1  0  0  0  0")
    out.append("M  END")
    return "\n".join(out) + "\n"


def _closure_token(k: int) -> str:
    return str(k) if k < 10 else f"%{k:02d}"


def export_smiles(g: CubicGraph, cycle: Optional[Sequence[int]] = None) -> str:
    """Carbon ring string along ``cycle``; chords and the ring closure are ring bonds.

    Ring bonds are numbered from 1 in order of (position of first endpoint,
    position of second endpoint) along the cycle.
    """
    if cycle is None:
        cycles = hamiltonian_cycles(g)
        if not cycles:
            raise NonHamiltonian("SMILES export needs a Hamiltonian cycle")
        cycle = cycles[0]
    if not is_hamiltonian_cycle(g, cycle):
        raise NotACycle("sequence is not a Hamiltonian cycle of the graph")
    n = g.n
    pos = {v: i for i, v in enumerate(cycle)}
    chain = {(min(i, i + 1), max(i, i + 1)) for i in range(n - 1)}
    ring = sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges)
    ring = [b for b in ring if b not in chain]
    marks: list[list[int]] = [[] for _ in range(n)]
    for k, (i, j) in enumerate(ring, 1):
        marks[i].append(k)
        marks[j].append(k)
    return "".join("C" + "".join(_closure_token(k) for k in sorted(m)) for m in marks)


_SMILES_TOKEN = re.compile(r"C|%\d\d|\d")


def parse_ring_smiles(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Atom count and bonds of a string produced by :func:`export_smiles`.

    Only ``C`` atoms and ring-closure numbers are understood.
    """
    pos = 0
    atom = -1
    bonds = []
    open_: dict[int, int] = {}
    while pos < len(text):
        m = _SMILES_TOKEN.match(text, pos)
        if m is None:
            raise YutsisError(f"unexpected character {text[pos]!r} at {pos}")
        tok = m.group()
        pos = m.end()
        if tok == "C":
            atom += 1
            if atom > 0:
                bonds.append((atom - 1, atom))
            continue
        if atom < 0:
            raise YutsisError("ring closure before the first atom")
        k = int(tok.lstrip("%"))
        if k in open_:
            bonds.append((open_.pop(k), atom))
        else:
            open_[k] = atom
    if open_:
        raise YutsisError(f"unclosed ring bonds {sorted(open_)}")
    return atom + 1, sorted(tuple(sorted(b)) for b in bonds)
