"""Named graphs and the conventional kind names of 15j and 18j symbols."""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .graph import CubicGraph, build_graph, canonical_form

PETERSEN = build_graph(10, [(i, (i + 1) % 5) for i in range(5)]
                       + [(i, i + 5) for i in range(5)]
                       + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])

# Petersen with vertex 0 blown up into a triangle.
TIETZE = build_graph(12, [(1, 2), (2, 3), (3, 4), (1, 6), (2, 7), (3, 8), (4, 9),
                          (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                          (10, 11), (11, 0), (0, 10), (10, 1), (11, 4), (0, 5)])

K4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
UTILITY = build_graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
PRISM3 = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])

FIFTEEN_J_KINDS = {
    "[5]^10": "1st kind",
    "[3,-4,4,-3,5]^2": "2nd kind",
    "[5,-4,4,-4,4]^2": "3rd kind",
    "[5,5,-4,4,5]^2": "4th kind",
}

# Capital-letter classes of the irreducible 18j symbols.
EIGHTEEN_J_LETTERS = {
    "A": "[6]^12",
    "B": "[-3,3]^6",
    "C": "[-5,5]^6",
    "D": "[4,-4,6]^4",
    "E": "[3,5,5,-3,5,5;-]",
    "F": "[4,-5,4,-5,-4,4;-]",
    "G": "[6,-5,5]^4",
    "H": "[6,-5,-4,4,-5,4,6,-4,5,-4,4,5]",
    "I": "[6,-4,5,-5,4,6,6,-5,-4,4,5,6]",
    "K": "[-4,4,4,6,6,-4]^2",
    "L": "[6,-3,6,6,3,6]^2",
    "M": "[6,4,6,6,6,-4]^2",
    "N": "[4,-3,4,5,-4,4;-]",
    "P": "[6,-3,5,6,-5,3,6,-5,-3,6,3,5]",
    "R": "[3,4,5,-3,5,-4;-]",
    "S": "[-3,5,-3,4,4,5;-]",
    "T": "[-4,6,3,6,6,-3,5,6,4,6,6,-5]",
    "V": "[6,-4,6,-4,3,5,6,-3,6,4,-5,4]",
}


@lru_cache(maxsize=None)
def _kinds() -> dict[tuple, str]:
    from .lcf import decode

    table = {canonical_form(decode(t)[0]).edges: k for t, k in FIFTEEN_J_KINDS.items()}
    table[canonical_form(PETERSEN).edges] = "5th kind"
    for letter, t in EIGHTEEN_J_LETTERS.items():
        table[canonical_form(decode(t)[0]).edges] = f"type {letter}"
    return table


def kind_of(g: CubicGraph) -> Optional[str]:
    return _kinds().get(canonical_form(g).edges)
