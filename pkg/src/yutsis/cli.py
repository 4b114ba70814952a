"""Command line interface: ``yutsis <subcommand> ...``.

Exit status is 0 on success, 1 on domain errors (the message names the
error class) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import errors
from .catalog import Catalog, build_catalog, lookup, make_entry
from .connectivity import classify, cyclic_edge_connectivity, edge_connectivity
from .enumeration import enumerate_cubic
from .export import export_dot, export_molfile, export_smiles
from .graph import format_edge_list, parse_edge_list
from .hamilton import hamiltonian_cycles
from .invariants import invariant_key
from .lcf import decode, lcf_alternatives
from .wigner import identify, parse_wigner, sum_to_graph

CLASS_CHOICES = ("all", "C1", "C2", "C3R", "reducible", "irreducible", "IRR", "IRR4", "IRR5")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _graph(path: str):
    return parse_edge_list(_read(path))


def _class_matches(code: str, wanted: str) -> bool:
    if wanted == "all":
        return True
    if wanted in ("irreducible", "IRR"):
        return code.startswith("IRR")
    if wanted == "reducible":
        return not code.startswith("IRR")
    return code == wanted


def _lcf_line(g) -> str:
    names = lcf_alternatives(g)
    return "LCF " + " = ".join(names) if names else "NONHAM"


def cmd_enumerate(args, out):
    for g in enumerate_cubic(args.n):
        if not _class_matches(classify(g).code, args.cls):
            continue
        if args.format == "key":
            print(invariant_key(g), file=out)
        elif args.format == "edges":
            print(g.edge_text(), file=out)
        else:
            print(_lcf_line(g), file=out)


def cmd_classify(args, out):
    g = _graph(args.file)
    c = classify(g)
    cyc = cyclic_edge_connectivity(g)
    print(f"class {c.code}", file=out)
    print(f"edge-connectivity {edge_connectivity(g)}", file=out)
    print(f"cyclic-connectivity {'none' if cyc is None else cyc}", file=out)
    if c.witness is not None:
        cut = " ".join(f"{u}-{v}" for u, v in c.witness.edges)
        print(f"cut {cut} sides {c.witness.side_sizes[0]} {c.witness.side_sizes[1]}", file=out)


def cmd_cycles(args, out):
    for c in hamiltonian_cycles(_graph(args.file)):
        print(" ".join(map(str, c)), file=out)


def cmd_lcf_encode(args, out):
    g = _graph(args.file)
    line = _lcf_line(g)
    if line == "NONHAM":
        raise errors.NonHamiltonian("graph has no Hamiltonian cycle")
    print(line, file=out)


def cmd_lcf_decode(args, out):
    g, _ = decode(args.lcf)
    out.write(format_edge_list(g))


def cmd_invariants(args, out):
    print(invariant_key(_graph(args.file)), file=out)


def cmd_lookup(args, out):
    entry = lookup(_graph(args.file), Catalog.read(args.catalog))
    print(entry.to_line(), file=out)


def cmd_export(args, out):
    g = _graph(args.file)
    if args.format == "dot":
        out.write(export_dot(g))
    elif args.format == "mol":
        out.write(export_molfile(g, title=Path(args.file).stem if args.file != "-" else ""))
    else:
        print(export_smiles(g), file=out)


def cmd_wigner(args, out):
    s = parse_wigner(_read(args.file))
    d = sum_to_graph(s)
    if not d.base.connected:
        raise errors.Disconnected("the sum factorizes into independent closed sums")
    if args.catalog:
        catalog = Catalog.read(args.catalog)
    else:
        catalog = build_catalog(d.n, sizes=[d.n])
    ident = identify(s, catalog)
    print(ident.name, file=out)
    e = ident.entry
    print(f"entry n={e.n} ordinal={e.ordinal} class={e.tag} lcf={e.lcf or 'NONHAM'} {e.key}",
          file=out)


def cmd_catalog_build(args, out):
    cat = build_catalog(args.max_n, irreducible_only_at=14 if args.irreducible_only_14 else None)
    cat.write(args.out)
    sizes = " ".join(f"{n}:{k}" for n, k in sorted(cat.sizes.items()))
    print(f"wrote {len(cat.entries)} entries ({sizes}) to {args.out}", file=out)


def _even_n(text: str) -> int:
    n = int(text)
    if n < 4 or n % 2:
        raise argparse.ArgumentTypeError("N must be an even integer >= 4")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="yutsis", description="Cubic graphs of Wigner 3n-j symbols.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", help="list connected cubic graphs on N vertices")
    s.add_argument("--n", type=_even_n, required=True)
    s.add_argument("--class", dest="cls", choices=CLASS_CHOICES, default="all")
    s.add_argument("--format", choices=("lcf", "edges", "key"), default="lcf")
    s.set_defaults(func=cmd_enumerate)

    for name, func, helptext in (
        ("classify", cmd_classify, "connectivity class of a graph"),
        ("cycles", cmd_cycles, "all Hamiltonian cycles, one vertex chain per line"),
        ("lcf-encode", cmd_lcf_encode, "LCF names of a graph"),
        ("invariants", cmd_invariants, "W d g EE key of a graph"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("file", help="edge-list file, or - for stdin")
        s.set_defaults(func=func)

    s = sub.add_parser("lcf-decode", help="edge list of an LCF string")
    s.add_argument("lcf")
    s.set_defaults(func=cmd_lcf_decode)

    s = sub.add_parser("lookup", help="find the catalog entry isomorphic to a graph")
    s.add_argument("file")
    s.add_argument("--catalog", required=True)
    s.set_defaults(func=cmd_lookup)

    s = sub.add_parser("export", help="write dot, molfile or SMILES")
    s.add_argument("file")
    s.add_argument("--format", choices=("dot", "mol", "smiles"), required=True)
    s.set_defaults(func=cmd_export)

    s = sub.add_parser("wigner", help="identify the 3n-j symbol of a closed 3jm product")
    s.add_argument("file")
    s.add_argument("--catalog")
    s.set_defaults(func=cmd_wigner)

    s = sub.add_parser("catalog-build", help="build and save the catalog")
    s.add_argument("--max-n", type=_even_n, required=True)
    s.add_argument("--irreducible-only-14", action="store_true")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_catalog_build)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except errors.YutsisError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
