"""Undirected simple graphs on vertices ``0..n-1`` stored as adjacency bitmasks.

Vertex sets are passed around either as Python ints (bit ``v`` set means
vertex ``v`` is a member) or as sorted tuples.  Cliques are always returned
as sorted tuples so that every downstream certificate is reproducible.
"""
from __future__ import annotations

from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator

Clique = tuple[int, ...]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_tuple(mask: int) -> Clique:
    return tuple(bits(mask))


class Graph:
    """Immutable undirected simple graph.

    ``Graph(n, edges)`` builds the graph from an edge iterable.  Self loops and
    out-of-range endpoints raise ``ValueError``; repeated edges are merged.
    ``n`` must be positive.
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"graph must have at least one vertex, got n={n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)

    @classmethod
    def from_adjacency(cls, masks: Iterable[int]) -> "Graph":
        masks = tuple(masks)
        g = cls.__new__(cls)
        n = len(masks)
        if n < 1:
            raise ValueError("graph must have at least one vertex")
        full = (1 << n) - 1
        for v, m in enumerate(masks):
            if m & ~full or m >> v & 1:
                raise ValueError(f"bad adjacency mask for vertex {v}")
            for u in bits(m):
                if not masks[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        g._n = n
        g._adj = masks
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls.from_adjacency(full & ~(1 << v) for v in range(n))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def n(self) -> int:
        return self._n

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def adj(self, v: int) -> int:
        """Neighbourhood of ``v`` as a bitmask."""
        return self._adj[v]

    @property
    def adjacency(self) -> tuple[int, ...]:
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def min_degree(self) -> int:
        return min(m.bit_count() for m in self._adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph.from_adjacency(full & ~m & ~(1 << v) for v, m in enumerate(self._adj))

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        adj = list(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph.from_adjacency(adj)

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", Clique]:
        """Induced subgraph, relabelled to ``0..k-1`` in increasing order.

        Returns the subgraph and the tuple mapping new labels to old ones.
        """
        labels = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(labels)}
        edges = [(index[u], index[v]) for u, v in combinations(labels, 2) if self.has_edge(u, v)]
        return Graph(len(labels), edges), labels

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.num_edges()})"


def turan_graph(n: int, t: int) -> Graph:
    """Complete ``t``-partite graph on ``n`` vertices with balanced parts.

    Part ``r`` is the residue class ``{v : v % t == r}``.
    """
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got n={n}, t={t}")
    full = (1 << n) - 1
    part = [0] * t
    for v in range(n):
        part[v % t] |= 1 << v
    return Graph.from_adjacency(full & ~part[v % t] for v in range(n))


def turan_parts(n: int, t: int) -> list[Clique]:
    return [tuple(range(r, n, t)) for r in range(t)]


def _higher(v: int) -> int:
    # all bits strictly above v, as a negative int usable with &
    return -(1 << (v + 1))


def _count(adj: tuple[int, ...], cand: int, need: int) -> int:
    if need == 1:
        return cand.bit_count()
    total = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if cand.bit_count() < need - 1:
            break
        sub = cand & adj[v]
        if need == 2:
            total += sub.bit_count()
        elif sub.bit_count() >= need - 1:
            total += _count(adj, sub, need - 1)
    return total


def count_cliques(G: Graph, t: int, within: int | None = None) -> int:
    """Number of ``t``-vertex cliques of ``G`` (optionally of ``G[within]``)."""
    if t < 1:
        raise ValueError("t must be positive")
    cand = G.full_mask if within is None else within
    return _count(G.adjacency, cand, t)


def _enumerate(adj, prefix: Clique, cand: int, need: int, out: list) -> None:
    if need == 0:
        out.append(prefix)
        return
    while cand and cand.bit_count() >= need:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        _enumerate(adj, prefix + (v,), cand & adj[v], need - 1, out)


def enumerate_cliques(G: Graph, t: int, within: int | None = None) -> list[Clique]:
    """All ``t``-cliques as sorted tuples, in lexicographic order."""
    if t < 1:
        raise ValueError("t must be positive")
    out: list[Clique] = []
    cand = G.full_mask if within is None else within
    _enumerate(G.adjacency, (), cand, t, out)
    return out


def max_clique_mask(G: Graph, within: int | None = None) -> int:
    """Lexicographically smallest maximum clique of ``G[within]`` as a mask.

    Depth-first search over increasing vertex sequences visits cliques in
    lexicographic order, so keeping only strict improvements returns the
    lexicographically first clique of maximum size.
    """
    adj = G.adjacency
    cand0 = G.full_mask if within is None else within
    if not cand0:
        return 0
    best = [0, 0]  # size, mask

    def search(clique: int, size: int, cand: int) -> None:
        if size > best[0]:
            best[0], best[1] = size, clique
        while cand:
            if size + cand.bit_count() <= best[0]:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            search(clique | low, size + 1, cand & adj[v])

    search(0, 0, cand0)
    return best[1]


def max_clique(G: Graph) -> Clique:
    """A maximum clique; ties broken by the smallest sorted vertex list."""
    return to_tuple(max_clique_mask(G))


def clique_number(G: Graph, within: int | None = None) -> int:
    return max_clique_mask(G, within).bit_count()


def maximal_cliques(G: Graph, within: int | None = None) -> list[Clique]:
    """Inclusion-maximal cliques (Bron-Kerbosch with Tomita pivoting), sorted."""
    adj = G.adjacency
    out: list[Clique] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(to_tuple(r))
            return
        px = p | x
        pivot = max(bits(px), key=lambda u: (p & adj[u]).bit_count())
        for v in bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    p0 = G.full_mask if within is None else within
    if p0:
        expand(0, p0, 0)
    out.sort()
    return out


def common_neighbors_in(G: Graph, U: Iterable[int] | int, W: Iterable[int] | int) -> int:
    """Members of ``U`` adjacent to every member of ``W`` (bitmask result).

    Both arguments may be masks or iterables of vertices.  With ``W`` empty
    the result is ``U``.  Members of ``W`` are never in the result because
    the graph has no loops.
    """
    u = U if isinstance(U, int) else to_mask(U)
    w = W if isinstance(W, int) else to_mask(W)
    adj = G.adjacency
    for v in bits(w):
        u &= adj[v]
    return u


def closure(G: Graph, U: int, W: Iterable[int] | int) -> int:
    """Vertex set of the induced subgraph ``W`` plus its common neighbours in ``U``."""
    w = W if isinstance(W, int) else to_mask(W)
    return common_neighbors_in(G, U, w) | w


def is_turan(G: Graph, t: int) -> bool:
    """Whether ``G`` is isomorphic to the balanced complete ``t``-partite graph.

    For ``n < t`` the only match is the complete graph (all parts singletons).
    """
    if t < 1:
        return False
    n = G.n
    full = G.full_mask
    seen = 0
    sizes = []
    for v in range(n):
        if seen >> v & 1:
            continue
        cls = full & ~G.adj(v)
        for u in bits(cls):
            if full & ~G.adj(u) != cls:
                return False
        seen |= cls
        sizes.append(cls.bit_count())
    if len(sizes) != min(n, t):
        return False
    return max(sizes) - min(sizes) <= 1


# -- edge-list text format -------------------------------------------------


class EdgeListError(ValueError):
    """Malformed edge-list input; the message names the source and line."""


def parse_edge_list(text: str, source: str = "<string>") -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise EdgeListError(f"{source}:{lineno}: expected integers, got {line!r}") from None
        if n is None:
            if len(nums) != 1 or nums[0] < 1:
                raise EdgeListError(f"{source}:{lineno}: first line must be a positive vertex count")
            n = nums[0]
            continue
        if len(nums) != 2:
            raise EdgeListError(f"{source}:{lineno}: expected 'u v', got {line!r}")
        u, v = nums
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"{source}:{lineno}: vertex out of range [0, {n})")
        if u == v:
            raise EdgeListError(f"{source}:{lineno}: self loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"{source}:{lineno}: duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise EdgeListError(f"{source}: no vertex count line")
    return Graph(n, edges)


def read_edge_list(path: str | Path) -> Graph:
    path = Path(path)
    return parse_edge_list(path.read_text(), source=str(path))


def format_edge_list(G: Graph) -> str:
    lines = [str(G.n)] + [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def write_edge_list(G: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(G))
