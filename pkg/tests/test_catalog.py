import pytest

from yutsis import errors
from yutsis.catalog import HEADER, Catalog, CatalogEntry, build_catalog, lookup
from yutsis.graph import are_isomorphic
from yutsis.lcf import decode, lcf_equivalent
from yutsis.names import PETERSEN, UTILITY


def test_sizes(catalog12):
    assert catalog12.sizes == {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


def test_irreducible_only_at_14():
    cat = build_catalog(14, irreducible_only_at=14, sizes=[14])
    assert cat.sizes == {14: 84}
    assert all(e.tag.startswith("IRR") for e in cat.entries)


@pytest.mark.slow
def test_full_14(catalog14):
    assert catalog14.sizes[14] == 509


def test_sort_order(catalog12):
    from yutsis.connectivity import tag_rank

    keys = [(e.n, tag_rank(e.tag), e.ordinal) for e in catalog12.entries]
    assert keys == sorted(keys)
    assert len({(e.n, e.ordinal) for e in catalog12.entries}) == len(keys)


def test_lookup_named(catalog12):
    e = lookup(PETERSEN, catalog12)
    assert str(e.key) == "W75 d2 g5 EE34.21829" and e.tag == "IRR5" and e.lcf is None
    cube = lookup(decode("[-3,3]^4")[0].relabel([3, 1, 7, 5, 0, 2, 6, 4]), catalog12)
    assert lcf_equivalent(cube.lcf, "[-3,3]^4")
    assert lookup(UTILITY.relabel([5, 0, 3, 1, 4, 2]), catalog12).lcf == "[3]^6"


def test_lookup_missing(catalog12):
    with pytest.raises(errors.NotInCatalog):
        lookup(decode("[7]^14")[0], catalog12)
    partial = Catalog([e for e in catalog12.entries if e.tag != "IRR5"])
    with pytest.raises(errors.NotFound):
        lookup(PETERSEN, partial)


def test_entries_consistent(catalog12):
    for e in catalog12.entries:
        g = e.graph()
        assert e.hamiltonian == (e.lcf is not None)
        if e.lcf:
            assert are_isomorphic(decode(e.lcf)[0], g)
    for n in catalog12.sizes:
        keys = [e.key for e in catalog12.stratum(n)]
        assert len(set(keys)) == len(keys)


def test_persistence_round_trip(catalog12, tmp_path):
    path = tmp_path / "cat.tsv"
    catalog12.write(path)
    text = path.read_text()
    assert text.startswith(HEADER + "\n")
    again = Catalog.read(path)
    assert again.entries == catalog12.entries
    again.write(tmp_path / "cat2.tsv")
    assert (tmp_path / "cat2.tsv").read_bytes() == path.read_bytes()


def test_line_format(catalog12):
    (e,) = catalog12.stratum(4)
    assert e.to_line() == "4\t0\tIRR*\t[2]^4\t6\t1\t3\t21.18918\t0-1,0-2,0-3,1-2,1-3,2-3"
    assert CatalogEntry.from_line(e.to_line()) == e


@pytest.mark.parametrize("text", ["", "# wrong\n", HEADER + "\n4\t0\tIRR*\n", HEADER + "\n4\tx\tIRR*\t[2]^4\t6\t1\t3\t21.18918\t0-1\n"])
def test_bad_files(text):
    with pytest.raises(errors.CatalogFormatError):
        Catalog.loads(text)
