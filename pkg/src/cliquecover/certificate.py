"""Clique-cover certificates, their JSON form and the coverage checker."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .graph import Clique, Graph, enumerate_cliques

TAGS = ("C1", "C2", "C3", "refinement", "peel", "extension", "exact")


@dataclass(frozen=True)
class CoverCertificate:
    """A list of cliques claimed to contain every ``t``-clique of a graph.

    Use :meth:`build` to assemble one from raw vertex sets; it sorts each set,
    drops sets with fewer than ``t`` vertices and removes duplicates (the
    first occurrence keeps its provenance tag).
    """

    t: int
    cliques: tuple[Clique, ...]
    provenance: tuple[str, ...]
    n: int | None = None

    def __post_init__(self):
        if len(self.cliques) != len(self.provenance):
            raise ValueError("one provenance tag per clique required")

    @classmethod
    def build(cls, t: int, items: Iterable[tuple[Iterable[int], str]], n: int | None = None):
        seen = set()
        cliques, tags = [], []
        for vertices, tag in items:
            c = tuple(sorted(vertices))
            if len(c) < t or c in seen:
                continue
            if tag not in TAGS:
                raise ValueError(f"unknown provenance tag {tag!r}")
            seen.add(c)
            cliques.append(c)
            tags.append(tag)
        return cls(t, tuple(cliques), tuple(tags), n)

    @property
    def size(self) -> int:
        return len(self.cliques)

    def __len__(self) -> int:
        return len(self.cliques)

    def count(self, tag: str) -> int:
        return self.provenance.count(tag)

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "n": self.n,
            "cliques": [list(c) for c in self.cliques],
            "provenance": list(self.provenance),
            "size": self.size,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "CoverCertificate":
        cliques = tuple(tuple(int(v) for v in c) for c in data["cliques"])
        prov = tuple(data.get("provenance") or ["exact"] * len(cliques))
        cert = cls(int(data["t"]), cliques, prov, data.get("n"))
        if "size" in data and data["size"] != cert.size:
            raise ValueError(f"certificate declares size {data['size']} but lists {cert.size} cliques")
        return cert

    @classmethod
    def load(cls, path: str | Path) -> "CoverCertificate":
        return cls.from_json(json.loads(Path(path).read_text()))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps() + "\n")


@dataclass(frozen=True)
class CoverReport:
    ok: bool
    reason: str | None = None
    witness: Clique = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_cover(G: Graph, cert: CoverCertificate) -> CoverReport:
    """Check that every listed set is a clique and every ``t``-clique is covered.

    On failure the report carries either the offending non-clique set or the
    first uncovered ``t``-clique in lexicographic order.
    """
    if cert.n is not None and cert.n != G.n:
        return CoverReport(False, f"certificate is for n={cert.n}, graph has n={G.n}")
    # holders[v]: bitmask of certificate entries containing v
    holders = [0] * G.n
    for idx, c in enumerate(cert.cliques):
        if any(v < 0 or v >= G.n for v in c):
            return CoverReport(False, "vertex out of range", c)
        if not G.is_clique(c):
            return CoverReport(False, "not a clique", c)
        for v in c:
            holders[v] |= 1 << idx
    for k in enumerate_cliques(G, cert.t):
        common = -1
        for v in k:
            common &= holders[v]
        if not common:
            return CoverReport(False, "uncovered clique", k)
    return CoverReport(True)
