import io

import pytest

from yutsis.cli import main
from yutsis.graph import format_edge_list
from yutsis.names import K4, PETERSEN, PRISM3


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in (("k4", K4), ("petersen", PETERSEN), ("prism", PRISM3)):
        p = tmp_path / f"{name}.txt"
        p.write_text(format_edge_list(g))
        paths[name] = str(p)
    six = tmp_path / "sixj.txt"
    six.write_text("+a +b +c\n-a +d +e\n-b -d +f\n-c -e -f\n")
    paths["sixj"] = str(six)
    return paths


def test_enumerate_keys():
    code, out = run("enumerate", "--n", "10", "--class", "irreducible", "--format", "key")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5 and "W75 d2 g5 EE34.21829" in lines


def test_enumerate_lcf_and_edges():
    _, out = run("enumerate", "--n", "8")
    assert len(out.splitlines()) == 5 and all(ln.startswith("LCF ") for ln in out.splitlines())
    _, out = run("enumerate", "--n", "6", "--format", "edges")
    assert len(out.splitlines()) == 2
    _, out = run("enumerate", "--n", "10", "--class", "C1")
    assert out.splitlines() == ["NONHAM"]


def test_decode_then_classify(tmp_path):
    code, out = run("lcf-decode", "[6,-5,5]^4")
    assert code == 0 and out.splitlines()[0] == "12"
    p = tmp_path / "g.txt"
    p.write_text(out)
    _, out = run("classify", str(p))
    assert out.splitlines()[0].startswith("class IRR")


def test_classify_prism(files):
    _, out = run("classify", files["prism"])
    assert "class C3R" in out and "cut 0-3 1-4 2-5 sides 3 3" in out


def test_cycles_and_encode(files):
    _, out = run("cycles", files["k4"])
    assert out.splitlines() == ["0 1 2 3", "0 1 3 2", "0 2 1 3"]
    _, out = run("lcf-encode", files["k4"])
    assert out == "LCF [2]^4\n"
    code, _ = run("lcf-encode", files["petersen"])
    assert code == 1


def test_invariants(files):
    _, out = run("invariants", files["petersen"])
    assert out == "W75 d2 g5 EE34.21829\n"


def test_export_formats(files):
    _, dot = run("export", files["prism"], "--format", "dot")
    assert dot.count("color=red") == 3
    _, mol = run("export", files["k4"], "--format", "mol")
    assert "V2000" in mol
    _, smi = run("export", files["k4"], "--format", "smiles")
    assert smi == "C12C3C1C23\n"


def test_wigner(files):
    code, out = run("wigner", files["sixj"])
    assert code == 0 and out.splitlines()[0] == "6j"


def test_catalog_build_and_lookup(files, tmp_path):
    cat = str(tmp_path / "cat.tsv")
    code, out = run("catalog-build", "--max-n", "10", "--out", cat)
    assert code == 0 and "10:19" in out
    _, out = run("lookup", files["petersen"], "--catalog", cat)
    assert "\tIRR5\tNONHAM\t75\t2\t5\t34.21829\t" in out
    code, out = run("wigner", files["sixj"], "--catalog", cat)
    assert out.startswith("6j\n")


def test_domain_error_exit_1(capsys):
    code, _ = run("lcf-decode", "[1,2,3]")
    assert code == 1
    assert "IllegalDistance" in capsys.readouterr().err


def test_missing_file_exit_1(capsys):
    assert run("classify", "/nonexistent/file")[0] == 1


def test_wrong_degree_file(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("4\n0 1\n0 2\n0 3\n1 2\n1 3\n")
    assert run("classify", str(p))[0] == 1
    assert "WrongDegree" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [[], ["bogus"], ["enumerate", "--n", "7"], ["export", "x", "--format", "png"]])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        run(*argv)
    assert info.value.code == 2
