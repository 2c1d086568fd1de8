"""Explicit 3- and 4-clique covers built from greedy partitions.

The 3-cover of a K5-free graph ``H`` with greedy partition ``A_1..A_p`` uses

* ``C1``: the parts with at least 3 vertices,
* ``C2``: closures ``T_{A_i}[v]`` and ``T_{A_i}[u, v]`` for triangles meeting
  exactly two parts,
* ``C3``: closures ``T_{A_i}[u, v]`` for triangles meeting three parts,

where ``T_U[W]`` is ``W`` together with its common neighbours inside ``U``.
Before filtering, the family has at most ``f(A)`` members.  The refinement
then cheapens the C3 part for triples of 4-parts, and :func:`build_4cover`
combines everything into a recursive 4-clique cover.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import combinations, product

from .certificate import CoverCertificate, validate_cover
from .graph import (Clique, Graph, bits, closure, count_cliques, enumerate_cliques, max_clique_mask,
                    to_tuple)
from .partition import CliquePartition, greedy_partition
from .sequence import GreedySequence, sequence_of, value_f

Triple = tuple[int, int, int]


class CoverError(RuntimeError):
    """A constructed certificate failed validation (a bug, never expected)."""


def _cross_edges(H: Graph, X: int, Y: int) -> list[tuple[int, int]]:
    return [(u, v) for u in bits(X) for v in bits(Y & H.adj(u))]


@dataclass
class ThreeCover:
    """Result of :func:`build_3cover`.

    ``c1`` and ``c2`` are lists of vertex masks; ``c3`` maps each part triple
    ``(i, j, k)`` (0-based, ``i < j < k``) to its list of masks.  The lists are
    kept before size filtering so their lengths follow the value accounting.
    """

    certificate: CoverCertificate
    partition: CliquePartition
    sequence: GreedySequence
    f: int
    c1: list[int] = field(repr=False)
    c2: list[int] = field(repr=False)
    c3: dict[Triple, list[int]] = field(repr=False)

    def __iter__(self):
        # unpacks as (certificate, partition, sequence, f)
        return iter((self.certificate, self.partition, self.sequence, self.f))

    @property
    def raw_size(self) -> int:
        return len(self.c1) + len(self.c2) + sum(len(v) for v in self.c3.values())


def _require_k5_free(H: Graph) -> None:
    if count_cliques(H, 5):
        raise ValueError("graph contains a K5")


def build_3cover(H: Graph, partition: CliquePartition | None = None) -> ThreeCover:
    """3-clique cover of a K5-free graph of size at most ``f`` of its greedy sequence."""
    _require_k5_free(H)
    P = partition if partition is not None else greedy_partition(H)
    A = sequence_of(P)
    parts = P.masks()
    p, a, b = A.p, A.a, A.b

    c1 = [parts[i] for i in range(b)]
    c2: list[int] = []
    for i in range(b):
        for j in range(i + 1, p):
            c2.extend(closure(H, parts[i], 1 << v) for v in bits(parts[j]))
    for i in range(a):
        for j in range(i + 1, a):
            c2.extend(closure(H, parts[j], 1 << v) for v in bits(parts[i]))
    for i in range(b):
        for j in range(max(i + 1, a), p):
            c2.extend(closure(H, parts[i], (1 << u) | (1 << v))
                      for u, v in combinations(bits(parts[j]), 2))
    # triples whose lowest part lies beyond b span no triangle
    c3: dict[Triple, list[int]] = {}
    for i in range(b):
        for j in range(i + 1, p):
            for k in range(j + 1, p):
                c3[(i, j, k)] = [closure(H, parts[i], (1 << u) | (1 << v))
                                 for u, v in _cross_edges(H, parts[j], parts[k])]

    items = [(to_tuple(m), "C1") for m in c1] + [(to_tuple(m), "C2") for m in c2]
    items += [(to_tuple(m), "C3") for key in sorted(c3) for m in c3[key]]
    cert = CoverCertificate.build(3, items, n=H.n)
    result = ThreeCover(cert, P, A, value_f(A).f, c1, c2, c3)
    _check(H, cert)
    return result


def _check(G: Graph, cert: CoverCertificate) -> None:
    report = validate_cover(G, cert)
    if not report:
        raise CoverError(f"constructed certificate invalid: {report.reason} {report.witness}")


# -- triple hypergraph --------------------------------------------------------

@dataclass(frozen=True)
class TripleHypergraph:
    """3-uniform hypergraph on the 4-vertex parts, with 1-based part indices."""

    a: int
    edges: frozenset[Triple]

    def has(self, i: int, j: int, k: int) -> bool:
        return tuple(sorted((i, j, k))) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def link_graph(self, v: int) -> Graph:
        """Graph on ``0..a-1`` joining ``x, y`` when ``{v, x, y}`` is an edge (0-based labels)."""
        pairs = [tuple(w - 1 for w in e if w != v) for e in self.edges if v in e]
        return Graph(self.a, pairs)


TURAN_12_4_EDGES = 54


def build_triple_hypergraph(H: Graph, P: CliquePartition) -> TripleHypergraph:
    """Triples of 4-parts whose union induces the 12-vertex 4-partite Turán graph.

    For K5-free ``H`` the union of three 4-parts has at most 54 edges, with
    equality exactly for that Turán graph, so the edge count decides.
    """
    parts = P.masks()
    a = sum(1 for m in parts if m.bit_count() == 4)
    edges = set()
    for i, j, k in combinations(range(a), 3):
        if count_cliques(H, 2, parts[i] | parts[j] | parts[k]) == TURAN_12_4_EDGES:
            edges.add((i + 1, j + 1, k + 1))
    return TripleHypergraph(a, frozenset(edges))


def _spanned(HG: TripleHypergraph, quad) -> int:
    return sum(1 for t in combinations(quad, 3) if t in HG.edges)


def k4_claim_violations(HG: TripleHypergraph) -> list[tuple[int, int, int, int]]:
    """4-sets spanning exactly three hyperedges (impossible for K5-free hosts)."""
    return [q for q in combinations(range(1, HG.a + 1), 4) if _spanned(HG, q) == 3]


def find_k4_triples(HG: TripleHypergraph) -> list[tuple[int, int, int, int]]:
    """All 4-sets of part indices spanning four hyperedges, in lexicographic order."""
    bad = k4_claim_violations(HG)
    if bad:
        warnings.warn(f"4-sets spanning exactly three hyperedges: {bad[:5]}", RuntimeWarning)
    return [q for q in combinations(range(1, HG.a + 1), 4) if _spanned(HG, q) == 4]


# -- refinement ---------------------------------------------------------------

@dataclass
class RefinementPlan:
    hypergraph: TripleHypergraph
    sparse: dict[Triple, tuple[tuple[int, int], int]]  # triple -> (pair, sets used)
    k4_family: list[tuple[int, int, int, int]]
    transversals: dict[tuple[int, int, int, int], list[int]]
    c3: dict[Triple, list[int]] = field(repr=False)
    certificate: CoverCertificate


def _transversal_k4s(H: Graph, quad_parts: list[int]) -> list[int]:
    out = []
    for vs in product(*(list(bits(m)) for m in quad_parts)):
        if H.is_clique(vs):
            out.append(sum(1 << v for v in vs))
    return out


def refinement_plan(H: Graph, base: ThreeCover) -> RefinementPlan:
    parts = base.partition.masks()
    HG = build_triple_hypergraph(H, base.partition)
    c3 = {k: list(v) for k, v in base.c3.items()}
    refined_tag: set[Triple] = set()

    # (a) a non-Turán triple has a part pair with at most 11 cross edges;
    #     cover its transversal triangles through that pair
    sparse = {}
    for i, j, k in combinations(range(HG.a), 3):
        if (i + 1, j + 1, k + 1) in HG.edges:
            continue
        pairs = [((i, j), k), ((i, k), j), ((j, k), i)]
        (x, y), z = min(pairs, key=lambda pz: len(_cross_edges(H, parts[pz[0][0]], parts[pz[0][1]])))
        sets = [closure(H, parts[z], (1 << u) | (1 << v)) for u, v in _cross_edges(H, parts[x], parts[y])]
        if len(sets) < len(c3[(i, j, k)]):
            c3[(i, j, k)] = sets
            refined_tag.add((i, j, k))
        sparse[(i, j, k)] = ((x, y), len(c3[(i, j, k)]))

    # (b) K4^(3)s pairwise sharing at most two parts: 24 transversal 4-cliques
    #     replace the sets of their four triples
    family: list[tuple[int, int, int, int]] = []
    transversals = {}
    for quad in find_k4_triples(HG):
        if any(len(set(quad) & set(other)) > 2 for other in family):
            continue
        zero = tuple(v - 1 for v in quad)
        k4s = _transversal_k4s(H, [parts[v] for v in zero])
        triples = list(combinations(zero, 3))
        if len(k4s) >= sum(len(c3[t]) for t in triples):
            continue
        family.append(quad)
        transversals[quad] = k4s
        for t in triples:
            c3[t] = []

    items = [(to_tuple(m), "C1") for m in base.c1] + [(to_tuple(m), "C2") for m in base.c2]
    for key in sorted(c3):
        tag = "refinement" if key in refined_tag else "C3"
        items += [(to_tuple(m), tag) for m in c3[key]]
    for quad in family:
        items += [(to_tuple(m), "refinement") for m in transversals[quad]]
    cert = CoverCertificate.build(3, items, n=H.n)
    _check(H, cert)
    return RefinementPlan(HG, sparse, family, transversals, c3, cert)


def refine_3cover(H: Graph, base: ThreeCover) -> CoverCertificate:
    """Refined 3-cover; never larger than ``base.certificate``."""
    cert = refinement_plan(H, base).certificate
    if cert.size > base.certificate.size:
        return base.certificate
    return cert


# -- recursive 4-cover ----------------------------------------------------------

def _cover4(G: Graph, alive: int) -> list[tuple[Clique, str]]:
    from .exact import exact_min_cover

    k = alive.bit_count()
    if k == 0:
        return []
    if k <= 5:
        sub, labels = G.subgraph(bits(alive))
        _, cert = exact_min_cover(sub, 4)
        return [(tuple(labels[v] for v in c), "exact") for c in cert.cliques]
    C = max_clique_mask(G, alive)
    c = C.bit_count()
    if c <= 3:
        return []
    if c == 4:
        # K5-free: each 4-clique is maximal and must be taken
        return [(q, "exact") for q in enumerate_cliques(G, 4, alive)]
    if c >= 6:
        rest = alive & ~C
        out = _cover4(G, rest)
        out.append((to_tuple(C), "peel"))
        out += [(to_tuple(closure(G, C, 1 << v)), "peel") for v in bits(rest)]
        out += [(to_tuple(closure(G, C, (1 << u) | (1 << v))), "peel")
                for u, v in enumerate_cliques(G, 2, rest)]
        out += [(to_tuple(closure(G, C, (1 << u) | (1 << v) | (1 << w))), "peel")
                for u, v, w in enumerate_cliques(G, 3, rest)]
        return out
    # c == 5: remove a minimum-degree vertex, cover the triangles of its neighbourhood
    v = min(bits(alive), key=lambda x: ((G.adj(x) & alive).bit_count(), x))
    out = _cover4(G, alive & ~(1 << v))
    nbrs = G.adj(v) & alive
    if nbrs:
        H, labels = G.subgraph(bits(nbrs))
        base = build_3cover(H)
        refined = refine_3cover(H, base)
        out += [(tuple(labels[u] for u in Q) + (v,), "extension") for Q in refined.cliques]
    return out


def build_4cover(G: Graph) -> CoverCertificate:
    """Validated 4-clique cover built by peeling, min-degree extension and recursion."""
    cert = CoverCertificate.build(4, _cover4(G, G.full_mask), n=G.n)
    _check(G, cert)
    return cert


def build_cover(G: Graph, t: int) -> CoverCertificate:
    """Constructive cover for ``t`` in {3, 4} (3 requires a K5-free graph)."""
    if t == 4:
        return build_4cover(G)
    if t == 3:
        return refine_3cover(G, build_3cover(G))
    raise ValueError("constructive covers exist for t = 3 (K5-free) and t = 4 only")

