import math

import networkx as nx
import numpy as np
import pytest

from oracles import charpoly_spectrum, numpy_spectrum, nx_graph
from yutsis import errors
from yutsis.connectivity import classify
from yutsis.graph import build_graph
from yutsis.invariants import (
    EigenNonConvergence,
    InvariantKey,
    diameter,
    estrada,
    estrada_exact,
    format_scaled,
    girth,
    invariant_key,
    jacobi_eigenvalues,
    round_scaled,
    spectrum,
    wiener,
)
from yutsis.lcf import decode
from yutsis.names import K4, PETERSEN, TIETZE, UTILITY


def test_named_values():
    assert (wiener(PETERSEN), diameter(PETERSEN), girth(PETERSEN)) == (75, 2, 5)
    assert str(invariant_key(PETERSEN)) == "W75 d2 g5 EE34.21829"
    assert str(invariant_key(TIETZE)) == "W129 d3 g3 EE41.70908"
    assert (wiener(K4), diameter(K4), girth(K4)) == (6, 1, 3)
    assert str(invariant_key(K4)) == "W6 d1 g3 EE21.18918"


def test_k4_and_utility_estrada_from_closed_form():
    assert estrada(K4) == round_scaled(math.exp(3) + 3 * math.exp(-1)) == 2118918
    ee = math.exp(3) + math.exp(-3) + 4
    assert estrada(UTILITY) == round_scaled(ee) == 2413532
    assert girth(UTILITY) == 4


def test_girth_and_wiener_against_networkx(graphs):
    for g in graphs[10] + graphs[12]:
        h = nx_graph(g)
        assert girth(g) == nx.girth(h)
        assert wiener(g) == int(nx.wiener_index(h))
        assert diameter(g) == nx.diameter(h)


def test_one_connected_twelve_keys(graphs):
    keys = {str(invariant_key(g)) for g in graphs[12] if classify(g).code == "C1"}
    assert keys == {"W184 d6 g3 EE49.84524", "W172 d5 g3 EE48.45339",
                    "W178 d6 g3 EE47.78916", "W172 d5 g3 EE47.10611"}


@pytest.mark.parametrize("text", ["[2]^4", "[3]^6", "[5]^10"])
def test_jacobi_against_characteristic_polynomial(text):
    g, _ = decode(text)
    exact = charpoly_spectrum(g)
    assert np.allclose(spectrum(g), exact, atol=1e-9)
    ee = math.fsum(math.exp(x) for x in exact)
    assert abs(estrada_exact(g) - ee) < 1e-7


def test_spectrum_sanity_all(graphs):
    for n, gs in graphs.items():
        for g in gs:
            ev = spectrum(g)
            assert np.all(ev >= -3 - 1e-9) and np.all(ev <= 3 + 1e-9)
            assert abs(ev.sum()) < 1e-9
            assert abs((ev ** 2).sum() - 3 * n) < 1e-9
            assert abs(ev.max() - 3) < 1e-9
            assert np.allclose(ev, numpy_spectrum(g), atol=1e-9)
            assert estrada_exact(g) > n


def test_jacobi_general_symmetric():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(9, 9))
    a = a + a.T
    assert np.allclose(jacobi_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-10)
    with pytest.raises(EigenNonConvergence):
        jacobi_eigenvalues(a, max_sweeps=1)


def test_rounding_half_away_from_zero():
    assert round_scaled(1.000005) == 100001
    assert round_scaled(1.0000049) == 100000
    assert round_scaled(-1.000005) == -100001
    assert format_scaled(3421829) == "34.21829"
    assert format_scaled(100) == "0.00100"


def test_key_ordering_and_equality():
    a = InvariantKey(75, 2, 5, 3421829)
    assert a == invariant_key(PETERSEN)
    assert a < InvariantKey(75, 2, 5, 3421830)


def test_disconnected():
    two = build_graph(8, list(K4.edges) + [(u + 4, v + 4) for u, v in K4.edges], allow_disconnected=True)
    with pytest.raises(errors.Disconnected):
        invariant_key(two)
