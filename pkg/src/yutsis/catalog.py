"""Persistent catalog of cubic graphs with class, LCF and invariant key.

File format: UTF-8 text, header ``# yutsis-catalog v1``, then one entry per
line with tab-separated fields::

    n  ordinal  class  lcf|NONHAM  W  d  g  EE  edgelist

where ``edgelist`` is the canonically labeled edge list as ``u-v`` pairs
joined by commas.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .connectivity import classify, tag_rank
from .enumeration import enumerate_cubic
from .errors import CatalogFormatError, NotFound, NotInCatalog, TooSmall
from .graph import CubicGraph, canonical_form
from .invariants import InvariantKey, format_scaled, invariant_key
from .lcf import canonical_lcf

HEADER = "# yutsis-catalog v1"


@dataclass(frozen=True)
class CatalogEntry:
    n: int
    ordinal: int
    tag: str
    lcf: Optional[str]
    key: InvariantKey
    edges: tuple[tuple[int, int], ...]

    @property
    def hamiltonian(self) -> bool:
        return self.lcf is not None

    def graph(self) -> CubicGraph:
        return CubicGraph(self.n, self.edges)

    def to_line(self) -> str:
        k = self.key
        return "\t".join([
            str(self.n), str(self.ordinal), self.tag, self.lcf or "NONHAM",
            str(k.wiener), str(k.diameter), str(k.girth), format_scaled(k.estrada),
            ",".join(f"{u}-{v}" for u, v in self.edges),
        ])

    @classmethod
    def from_line(cls, line: str) -> "CatalogEntry":
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 9:
            raise CatalogFormatError(f"expected 9 tab-separated fields, got {len(parts)}")
        n, ordinal, tag, lcf, w, d, g, ee, edges = parts
        try:
            whole, frac = ee.split(".")
            scaled = int(whole) * 10**5 + int(frac.ljust(5, "0")[:5])
            edge_list = tuple(tuple(int(x) for x in e.split("-")) for e in edges.split(","))
            return cls(int(n), int(ordinal), tag, None if lcf == "NONHAM" else lcf,
                       InvariantKey(int(w), int(d), int(g), scaled), edge_list)
        except ValueError as exc:
            raise CatalogFormatError(f"malformed entry: {exc}") from None


def make_entry(g: CubicGraph, ordinal: int) -> CatalogEntry:
    cf = canonical_form(g)
    return CatalogEntry(g.n, ordinal, classify(g).code, canonical_lcf(g), invariant_key(g), cf.edges)


def _sort_key(e: CatalogEntry):
    return (e.n, tag_rank(e.tag), e.ordinal)


@dataclass
class Catalog:
    entries: list[CatalogEntry] = field(default_factory=list)

    def __post_init__(self):
        self.entries.sort(key=_sort_key)
        self._by_form = {(e.n, e.edges): e for e in self.entries}
        self._by_lcf = {(e.n, e.lcf): e for e in self.entries if e.lcf}

    def stratum(self, n: int) -> list[CatalogEntry]:
        return [e for e in self.entries if e.n == n]

    @property
    def sizes(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for e in self.entries:
            out[e.n] = out.get(e.n, 0) + 1
        return out

    def dumps(self) -> str:
        return HEADER + "\n" + "".join(e.to_line() + "\n" for e in self.entries)

    def write(self, path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def loads(cls, text: str) -> "Catalog":
        lines = text.splitlines()
        if not lines or lines[0].strip() != HEADER:
            raise CatalogFormatError(f"missing header {HEADER!r}")
        return cls([CatalogEntry.from_line(ln) for ln in lines[1:] if ln.strip()])

    @classmethod
    def read(cls, path) -> "Catalog":
        return cls.loads(Path(path).read_text(encoding="utf-8"))


def build_stratum(n: int, irreducible_only: bool = False) -> list[CatalogEntry]:
    out = []
    for ordinal, g in enumerate(enumerate_cubic(n)):
        if irreducible_only and not classify(g).is_irreducible:
            continue
        out.append(make_entry(g, ordinal))
    return out


def build_catalog(max_n: int, irreducible_only_at: Optional[int] = None,
                  sizes: Iterable[int] = ()) -> Catalog:
    """Catalog of every n in 4..max_n (or just ``sizes`` when given).

    At ``n == irreducible_only_at`` only irreducible graphs are kept; their
    ordinals still count positions in the full enumeration.
    """
    if max_n < 4:
        raise TooSmall(f"max_n must be at least 4, got {max_n}")
    ns = list(sizes) or list(range(4, max_n + 1, 2))
    entries = []
    for n in ns:
        entries.extend(build_stratum(n, irreducible_only=(n == irreducible_only_at)))
    return Catalog(entries)


def lookup(g: CubicGraph, catalog: Catalog) -> CatalogEntry:
    """Entry isomorphic to ``g``: by canonical LCF if Hamiltonian, else canonical form."""
    if g.n not in catalog.sizes:
        raise NotInCatalog(f"the catalog has no graphs on {g.n} vertices")
    lcf = canonical_lcf(g)
    if lcf is not None:
        entry = catalog._by_lcf.get((g.n, lcf))
    else:
        entry = catalog._by_form.get((g.n, canonical_form(g).edges))
    if entry is None:
        raise NotFound(f"no isomorphic entry among the {g.n}-vertex graphs of this catalog")
    return entry
