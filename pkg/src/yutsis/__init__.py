"""Catalog of the cubic graphs behind Wigner 3n-j symbols."""

from .catalog import Catalog, CatalogEntry, build_catalog, lookup
from .connectivity import YutsisClass, classify, cyclic_edge_connectivity, edge_connectivity
from .enumeration import enumerate_cubic
from .graph import (
    CubicGraph,
    DirectedCubicGraph,
    all_pairs_distances,
    are_isomorphic,
    build_graph,
    canonical_form,
)
from .hamilton import hamiltonian_cycles, is_hamiltonian
from .invariants import diameter, estrada, girth, invariant_key, wiener
from .lcf import canonical_lcf, contract, decode, encode_cycle, expand, lcf_equivalent
from .wigner import identify, parse_wigner, sum_to_graph

__version__ = "0.1.0"
